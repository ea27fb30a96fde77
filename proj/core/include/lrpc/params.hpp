#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrpc/small_field.hpp"

namespace lrpc {

enum class Scheme : uint8_t { Kem = 0, Pke = 1 };

/// A shipped parameter set: code parameters, the sparse modulus P, the
/// security target, and the published table row it is checked against.
struct ParamSet {
    std::string name;   // e.g. "kem-128", "pke64-192", "pke80-256"
    uint8_t id;         // stable identifier used in key/ciphertext files
    Scheme scheme;
    unsigned level;     // target security in bits (128/192/256)
    unsigned q, n, m, d, r;
    std::vector<unsigned> P_exps;  // exponents of the nonzero terms of P, descending

    double target_security;
    int target_pf_log2;

    // Printed reference values, kept for discrepancy flagging only.
    double table_structural;
    double table_generic;
    double table_entropy;
    uint64_t table_pk_bits;
};

const std::vector<ParamSet>& shipped_paramsets();
const ParamSet* find_paramset(const std::string& name);
const ParamSet* find_paramset(unsigned level, Scheme scheme);
const ParamSet* find_paramset(uint8_t id);

/// Dense modulus polynomial from the sparse exponent list.
fqpoly::Poly modulus_poly(const ParamSet& ps);

}  // namespace lrpc
