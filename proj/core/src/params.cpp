#include "lrpc/params.hpp"

#include <stdexcept>

namespace lrpc {

const std::vector<ParamSet>& shipped_paramsets() {
    static const std::vector<ParamSet> sets = {
        // KEM, p_f <= 2^-30..-36
        {"kem-128", 1, Scheme::Kem, 128, 2, 47, 71, 6, 5, {47, 5, 0},
         128, -30, 130, 146, 311, 3337},
        {"kem-192", 2, Scheme::Kem, 192, 2, 53, 89, 7, 6, {53, 6, 2, 1, 0},
         192, -32, 207, 221, 499, 4717},
        {"kem-256", 3, Scheme::Kem, 256, 2, 67, 113, 8, 7, {67, 5, 2, 1, 0},
         256, -36, 312, 329, 743, 7571},
        // PKE, p_f <= 2^-64
        {"pke64-128", 4, Scheme::Pke, 128, 2, 83, 71, 7, 5, {83, 7, 4, 2, 0},
         128, -64, 133, 144, 331, 5893},
        {"pke64-192", 5, Scheme::Pke, 192, 2, 83, 101, 7, 5, {83, 7, 4, 2, 0},
         192, -64, 209, 195, 481, 8383},
        {"pke64-256", 6, Scheme::Pke, 256, 2, 89, 107, 8, 6, {89, 38, 0},
         256, -64, 273, 260, 607, 9523},
        // PKE, p_f <= 2^-80
        {"pke80-128", 7, Scheme::Pke, 128, 2, 101, 79, 7, 5, {101, 7, 6, 1, 0},
         128, -80, 136, 157, 371, 7979},
        {"pke80-192", 8, Scheme::Pke, 192, 2, 103, 97, 8, 6, {103, 9, 0},
         192, -80, 229, 234, 547, 9991},
        {"pke80-256", 9, Scheme::Pke, 256, 2, 103, 107, 8, 6, {103, 9, 0},
         256, -80, 259, 260, 607, 11021},
    };
    return sets;
}

const ParamSet* find_paramset(const std::string& name) {
    for (const ParamSet& ps : shipped_paramsets())
        if (ps.name == name) return &ps;
    return nullptr;
}

const ParamSet* find_paramset(unsigned level, Scheme scheme) {
    // the PKE default is the 2^-64 failure-rate family
    for (const ParamSet& ps : shipped_paramsets()) {
        if (ps.level != level || ps.scheme != scheme) continue;
        if (scheme == Scheme::Pke && ps.name.rfind("pke64-", 0) != 0) continue;
        return &ps;
    }
    return nullptr;
}

const ParamSet* find_paramset(uint8_t id) {
    for (const ParamSet& ps : shipped_paramsets())
        if (ps.id == id) return &ps;
    return nullptr;
}

fqpoly::Poly modulus_poly(const ParamSet& ps) {
    if (ps.P_exps.empty()) throw std::domain_error("empty modulus");
    fqpoly::Poly P(ps.P_exps.front() + 1, 0);
    for (unsigned e : ps.P_exps) {
        if (e >= P.size()) throw std::domain_error("modulus exponents not descending");
        P[e] = 1;
    }
    if (P.back() != 1 || fqpoly::degree(P) != int(ps.n))
        throw std::domain_error("modulus degree mismatch");
    return P;
}

}  // namespace lrpc
