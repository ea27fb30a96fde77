// command-line front end: key generation, encapsulation, encryption,
// parameter reports and Monte Carlo simulation runs.
//
// exit codes: 0 ok, 1 usage/format error, 2 decapsulation or decryption
// failure, 3 simulation assertion breach.

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrpc/analysis.hpp"
#include "lrpc/kem.hpp"
#include "lrpc/sim.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<uint8_t, 32> parse_seed(const std::string& hex) {
    if (hex.size() != 64) throw UsageError("seed must be 64 hex characters");
    std::array<uint8_t, 32> out{};
    for (size_t i = 0; i < 32; ++i) {
        auto nib = [&](char c) -> unsigned {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw UsageError("seed must be hex");
        };
        out[i] = uint8_t(nib(hex[2 * i]) << 4 | nib(hex[2 * i + 1]));
    }
    return out;
}

// one generator per invocation; if no seed is given, draw one from the OS
// and echo it to stderr so the run can be replayed
lrpc::Rng make_rng(const std::string& seed_hex) {
    std::array<uint8_t, 32> seed{};
    if (!seed_hex.empty()) {
        seed = parse_seed(seed_hex);
    } else {
        std::random_device rd;
        for (size_t i = 0; i < 32; i += 4) {
            uint32_t w = rd();
            for (int b = 0; b < 4; ++b) seed[i + b] = uint8_t(w >> (8 * b));
        }
        fprintf(stderr, "seed: ");
        for (uint8_t b : seed) fprintf(stderr, "%02x", b);
        fprintf(stderr, "\n");
    }
    return lrpc::Rng(seed.data());
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<uint8_t>& data, bool secret) {
    int flags = O_WRONLY | O_CREAT | O_TRUNC;
    int fd = open(path.c_str(), flags, secret ? 0600 : 0644);
    if (fd < 0) throw std::runtime_error("cannot write " + path);
    size_t off = 0;
    while (off < data.size()) {
        ssize_t w = write(fd, data.data() + off, data.size() - off);
        if (w <= 0) {
            close(fd);
            throw std::runtime_error("short write to " + path);
        }
        off += size_t(w);
    }
    close(fd);
}

const lrpc::ParamSet& pick_paramset(const std::string& set_name, unsigned level,
                                    const std::string& scheme) {
    if (!set_name.empty()) {
        const lrpc::ParamSet* ps = lrpc::find_paramset(set_name);
        if (!ps) throw UsageError("unknown parameter set: " + set_name);
        return *ps;
    }
    lrpc::Scheme s = scheme == "pke" ? lrpc::Scheme::Pke : lrpc::Scheme::Kem;
    const lrpc::ParamSet* ps = lrpc::find_paramset(level, s);
    if (!ps) throw UsageError("no parameter set for that level/scheme");
    return *ps;
}

// --- params report ----------------------------------------------------------

json report_to_json(const lrpc::ParamSet& ps, const lrpc::CostReport& r) {
    json j;
    j["name"] = ps.name;
    j["scheme"] = ps.scheme == lrpc::Scheme::Kem ? "kem" : "pke";
    j["q"] = ps.q;
    j["n"] = ps.n;
    j["m"] = ps.m;
    j["d"] = ps.d;
    j["r"] = ps.r;
    j["structural_log2"] = r.structural_log2;
    j["generic_log2"] = r.generic_log2;
    j["quantum_generic_log2"] = r.quantum_generic_log2;
    j["failure_upper_log2"] = r.pf_upper_log2;
    j["failure_upper_log2_q2"] = r.pf_upper_log2_q2;
    j["support_entropy_bits"] = r.entropy_bits;
    j["pk_bits"] = r.pk_bits;
    j["ct_bits"] = r.ct_bits;
    j["warnings"] = r.warnings;
    j["ok"] = r.ok;
    return j;
}

int cmd_params(const std::string& set_name, unsigned level, const std::string& scheme,
               bool all, const std::string& format) {
    std::vector<const lrpc::ParamSet*> sets;
    if (all) {
        for (const auto& ps : lrpc::shipped_paramsets()) sets.push_back(&ps);
    } else {
        sets.push_back(&pick_paramset(set_name, level, scheme));
    }
    if (format == "json") {
        json out = json::array();
        for (const auto* ps : sets) out.push_back(report_to_json(*ps, lrpc::validate_paramset(*ps)));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    printf("%-11s %3s %3s %3s %2s %2s %10s %8s %8s %8s %8s %8s\n", "set", "n", "m", "d", "r",
           "q", "structural", "generic", "quantum", "entropy", "pk_bits", "pf<=2^");
    for (const auto* ps : sets) {
        lrpc::CostReport r = lrpc::validate_paramset(*ps);
        double pf = ps->q == 2 ? r.pf_upper_log2_q2 : r.pf_upper_log2;
        printf("%-11s %3u %3u %3u %2u %2u %10.1f %8.1f %8.1f %8.1f %8llu %8.1f\n",
               ps->name.c_str(), ps->n, ps->m, ps->d, ps->r, ps->q, r.structural_log2,
               r.generic_log2, r.quantum_generic_log2, r.entropy_bits,
               (unsigned long long)r.pk_bits, pf);
        for (const auto& w : r.warnings) printf("  note: %s\n", w.c_str());
    }
    return 0;
}

// --- simulate ---------------------------------------------------------------

lrpc::SimAlgorithm parse_alg(const std::string& s) {
    if (s == "basic") return lrpc::SimAlgorithm::Basic;
    if (s == "fdecode") return lrpc::SimAlgorithm::FDecode;
    if (s == "fprob") return lrpc::SimAlgorithm::FProb;
    if (s == "crypto") return lrpc::SimAlgorithm::Crypto;
    if (s == "kem-loop") return lrpc::SimAlgorithm::KemLoop;
    throw UsageError("unknown algorithm: " + s);
}

// predicted rate for the metric the experiment is about, when a closed form
// applies; NaN otherwise
double predicted_rate(const lrpc::CellSpec& spec) {
    const auto& c = spec.cell;
    double q = c.q;
    switch (spec.alg) {
        case lrpc::SimAlgorithm::FDecode:
            if (c.d == 2)  // failure rate law
                return std::pow(q, 3.0 * c.r - 2.0 * (c.n - c.k)) / (q - 1.0);
            return NAN;
        case lrpc::SimAlgorithm::FProb:
        case lrpc::SimAlgorithm::Crypto:
            if (spec.plant == lrpc::PlantMode::ForcedCodim && spec.codim == 1)
                return std::pow(q, (c.q == 2 ? 1.0 - c.r : 2.0 - c.r) * (c.d - 2.0));
            return NAN;
        case lrpc::SimAlgorithm::Basic:  // syndrome-deficiency rate law
            return std::pow(q, double(c.r) * c.d - double(c.n - c.k));
        default:
            return NAN;
    }
}

double metric_value(const std::string& metric, const lrpc::CellResult& res) {
    if (metric == "success_rate") return res.success_rate();
    if (metric == "failure_rate") return res.failure_rate();
    if (metric == "syndrome_deficiency_rate")
        return res.trials ? double(res.syndrome_deficient) / double(res.trials) : 0.0;
    throw UsageError("unknown metric: " + metric);
}

int cmd_simulate(const std::string& spec_path, const std::string& out_dir, unsigned threads) {
    json root;
    {
        std::ifstream in(spec_path);
        if (!in) throw std::runtime_error("cannot open " + spec_path);
        in >> root;
    }
    json experiments = root.is_array()            ? root
                       : root.contains("experiments") ? root["experiments"]
                                                      : json::array({root});

    if (!out_dir.empty()) mkdir(out_dir.c_str(), 0755);
    std::string base = out_dir.empty() ? "." : out_dir;
    std::ofstream jsonl(base + "/results.jsonl");
    std::ofstream csv(base + "/summary.csv");
    csv << "algorithm,planting,q,m,n,k,d,r,trials,skipped,successes,failures,"
           "syndrome_deficient,decap_bot,key_mismatch,conditioned,conditioned_exact,"
           "failure_rate,wilson_lo,wilson_hi,predicted,wall_seconds,assert_ok\n";

    bool all_ok = true;
    for (const json& exp : experiments) {
        lrpc::CellSpec spec;
        spec.alg = parse_alg(exp.at("algorithm").get<std::string>());
        spec.trials = exp.value("trials", uint64_t(1000));
        spec.base_seed = exp.value("base_seed", uint64_t(1));
        if (exp.contains("planting")) {
            const json& p = exp["planting"];
            std::string mode = p.value("mode", "random-error");
            if (mode == "random-error") {
                spec.plant = lrpc::PlantMode::RandomError;
            } else if (mode == "forced-codim") {
                spec.plant = lrpc::PlantMode::ForcedCodim;
                spec.codim = p.value("codim", 1u);
            } else if (mode == "syndrome-direct") {
                spec.plant = lrpc::PlantMode::SyndromeDirect;
                spec.require_full_syndrome = p.value("full_syndrome", false);
            } else {
                throw UsageError("unknown planting mode: " + mode);
            }
        }
        unsigned th = exp.value("threads", threads);

        for (const json& cell : exp.at("grid")) {
            spec.cell.q = cell.at("q").get<unsigned>();
            spec.cell.m = cell.at("m").get<unsigned>();
            spec.cell.n = cell.at("n").get<unsigned>();
            spec.cell.k = cell.value("k", 0u);
            spec.cell.d = cell.at("d").get<unsigned>();
            spec.cell.r = cell.at("r").get<unsigned>();

            lrpc::CellResult res = lrpc::run_cell(spec, th);
            double lo, hi;
            lrpc::wilson_interval(res.failures, res.trials, &lo, &hi);
            double pred = predicted_rate(spec);

            bool assert_ok = true;
            if (exp.contains("assert") && !res.skipped) {
                const json& a = exp["assert"];
                double v = metric_value(a.at("metric").get<std::string>(), res);
                if (a.contains("min") && v < a["min"].get<double>()) assert_ok = false;
                if (a.contains("max") && v > a["max"].get<double>()) assert_ok = false;
            }
            all_ok = all_ok && assert_ok;

            json row;
            row["algorithm"] = exp["algorithm"];
            row["cell"] = {{"q", spec.cell.q}, {"m", spec.cell.m}, {"n", spec.cell.n},
                           {"k", spec.cell.k}, {"d", spec.cell.d}, {"r", spec.cell.r}};
            row["trials"] = res.trials;
            row["skipped"] = res.skipped;
            if (res.skipped) row["skip_reason"] = res.skip_reason;
            row["successes"] = res.successes;
            row["failures"] = res.failures;
            row["dim_ef_deficient"] = res.dim_ef_deficient;
            row["syndrome_deficient"] = res.syndrome_deficient;
            row["support_wrong"] = res.support_wrong;
            row["solve_failed"] = res.solve_failed;
            row["decap_bot"] = res.decap_bot;
            row["key_mismatch"] = res.key_mismatch;
            row["conditioned"] = res.conditioned;
            row["conditioned_exact"] = res.conditioned_exact;
            row["failure_rate"] = res.failure_rate();
            row["failure_wilson"] = {lo, hi};
            if (!std::isnan(pred)) row["predicted"] = pred;
            row["wall_seconds"] = res.wall_seconds;
            row["assert_ok"] = assert_ok;
            jsonl << row.dump() << "\n";

            csv << exp["algorithm"].get<std::string>() << ','
                << (spec.plant == lrpc::PlantMode::RandomError    ? "random-error"
                    : spec.plant == lrpc::PlantMode::ForcedCodim ? "forced-codim"
                                                                 : "syndrome-direct")
                << ',' << spec.cell.q << ',' << spec.cell.m << ',' << spec.cell.n << ','
                << spec.cell.k << ',' << spec.cell.d << ',' << spec.cell.r << ','
                << res.trials << ',' << res.skipped << ',' << res.successes << ','
                << res.failures << ',' << res.syndrome_deficient << ',' << res.decap_bot
                << ',' << res.key_mismatch << ',' << res.conditioned << ','
                << res.conditioned_exact << ',' << res.failure_rate() << ',' << lo << ','
                << hi << ',' << (std::isnan(pred) ? std::string() : std::to_string(pred))
                << ',' << res.wall_seconds << ',' << (assert_ok ? 1 : 0) << "\n";

            fprintf(stderr, "cell q=%u m=%u n=%u k=%u d=%u r=%u: %s\n", spec.cell.q,
                    spec.cell.m, spec.cell.n, spec.cell.k, spec.cell.d, spec.cell.r,
                    res.skipped ? ("skipped: " + res.skip_reason).c_str()
                                : (assert_ok ? "done" : "ASSERTION FAILED"));
        }
    }
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"low-rank parity check toolkit"};
    app.require_subcommand(1);

    std::string seed_hex, set_name, scheme = "kem", format = "table";
    unsigned level = 128, threads = 1;
    std::string pk_path, sk_path, ct_path, key_path, in_path, out_path, spec_path, out_dir;
    bool all_sets = false;

    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    keygen->add_option("--level", level, "security level")->check(CLI::IsMember({128u, 192u, 256u}));
    keygen->add_option("--scheme", scheme)->check(CLI::IsMember({"kem", "pke"}));
    keygen->add_option("--set", set_name, "parameter set name (overrides level/scheme)");
    keygen->add_option("--seed", seed_hex, "32-byte hex seed");
    keygen->add_option("--pk-out", pk_path)->required();
    keygen->add_option("--sk-out", sk_path)->required();

    auto* encap = app.add_subcommand("encap", "encapsulate a shared key");
    encap->add_option("--pk", pk_path)->required();
    encap->add_option("--seed", seed_hex);
    encap->add_option("--ct-out", ct_path)->required();
    encap->add_option("--key-out", key_path)->required();

    auto* decap = app.add_subcommand("decap", "decapsulate a shared key");
    decap->add_option("--sk", sk_path)->required();
    decap->add_option("--ct", ct_path)->required();
    decap->add_option("--key-out", key_path)->required();

    auto* encrypt = app.add_subcommand("encrypt", "encrypt a message file");
    encrypt->add_option("--pk", pk_path)->required();
    encrypt->add_option("--in", in_path)->required();
    encrypt->add_option("--seed", seed_hex);
    encrypt->add_option("--ct-out", ct_path)->required();

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    decrypt->add_option("--sk", sk_path)->required();
    decrypt->add_option("--ct", ct_path)->required();
    decrypt->add_option("--out", out_path)->required();

    auto* params = app.add_subcommand("params", "parameter-set cost report");
    params->add_option("--set", set_name);
    params->add_option("--level", level)->check(CLI::IsMember({128u, 192u, 256u}));
    params->add_option("--scheme", scheme)->check(CLI::IsMember({"kem", "pke"}));
    params->add_flag("--all", all_sets, "report all shipped sets");
    params->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* simulate = app.add_subcommand("simulate", "run Monte Carlo experiments");
    simulate->add_option("--spec", spec_path, "experiment spec (JSON)")->required();
    simulate->add_option("--out", out_dir, "output directory");
    simulate->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*keygen) {
            const lrpc::ParamSet& ps = pick_paramset(set_name, level, scheme);
            lrpc::Rng rng = make_rng(seed_hex);
            lrpc::IdealLrpc sys(ps);
            lrpc::KeyPair kp = sys.keygen(rng);
            write_file(pk_path, lrpc::serialize_public_key(kp.pk), false);
            write_file(sk_path, lrpc::serialize_secret_key(kp.sk), true);
            return 0;
        }
        if (*encap) {
            lrpc::PublicKey pk = lrpc::parse_public_key(read_file(pk_path));
            lrpc::Rng rng = make_rng(seed_hex);
            lrpc::IdealLrpc sys(*pk.ps);
            auto res = sys.encap(pk, rng);
            write_file(ct_path, lrpc::serialize_ciphertext(*pk.ps, res.c), false);
            write_file(key_path, std::vector<uint8_t>(res.key.begin(), res.key.end()), true);
            return 0;
        }
        if (*decap) {
            lrpc::SecretKey sk = lrpc::parse_secret_key(read_file(sk_path));
            const lrpc::ParamSet* ct_ps = nullptr;
            lrpc::ExtVector c = lrpc::parse_ciphertext(read_file(ct_path), &ct_ps);
            if (ct_ps != sk.ps) throw std::runtime_error("ciphertext/key parameter mismatch");
            lrpc::IdealLrpc sys(*sk.ps);
            auto key = sys.decap(sk, c);
            if (!key) {
                fprintf(stderr, "decapsulation failure\n");
                return 2;
            }
            write_file(key_path, std::vector<uint8_t>(key->begin(), key->end()), true);
            return 0;
        }
        if (*encrypt) {
            lrpc::PublicKey pk = lrpc::parse_public_key(read_file(pk_path));
            std::vector<uint8_t> msg = read_file(in_path);
            lrpc::Rng rng = make_rng(seed_hex);
            lrpc::IdealLrpc sys(*pk.ps);
            lrpc::PkeCiphertext ct = sys.encrypt(pk, msg, rng);
            write_file(ct_path, lrpc::serialize_pke_ciphertext(*pk.ps, ct), false);
            return 0;
        }
        if (*decrypt) {
            lrpc::SecretKey sk = lrpc::parse_secret_key(read_file(sk_path));
            const lrpc::ParamSet* ct_ps = nullptr;
            lrpc::PkeCiphertext ct = lrpc::parse_pke_ciphertext(read_file(ct_path), &ct_ps);
            if (ct_ps != sk.ps) throw std::runtime_error("ciphertext/key parameter mismatch");
            lrpc::IdealLrpc sys(*sk.ps);
            auto msg = sys.decrypt(sk, ct);
            if (!msg) {
                fprintf(stderr, "decryption failure\n");
                return 2;
            }
            write_file(out_path, *msg, true);
            return 0;
        }
        if (*params) return cmd_params(set_name, level, scheme, all_sets, format);
        if (*simulate) return cmd_simulate(spec_path, out_dir, threads);
    } catch (const std::exception& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
