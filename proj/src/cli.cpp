#include "chaincodes/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chaincodes/ambient.hpp"
#include "chaincodes/enumerator.hpp"
#include "chaincodes/selfdual.hpp"
#include "chaincodes/serialize.hpp"

namespace chaincodes {

namespace {

struct RunConfig {
    ParamSpec spec;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::string format = "text";
    std::string output;
    std::uint64_t materialize_cap = kDefaultMaterializeCap;
    int oracle_dim_cap = kDefaultOracleDimCap;
    std::uint64_t offset = 0;
    std::uint64_t limit = 0;  // 0 = no limit
    bool generators = false;
    bool list_ideals = false;
    bool verify_dual = true;
};

class Invalid : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        return std::stoull(v, nullptr, 0);
    } catch (const std::exception&) {
        throw Invalid(std::string(name) + " must be a non-negative integer");
    }
}

// Writes to --output when given, otherwise to the provided stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Invalid("cannot open output file " + path);
            os_ = &file_;
        }
    }
    std::ostream& os() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

nlohmann::json header(const char* command, const Params& p) {
    return {{"schema", kSchemaVersion}, {"command", command}, {"params", to_json(p)}};
}

void dump(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << '\n'; }

int cmd_factor(const RunConfig& cfg, std::ostream& out) {
    const Params p = make_params(cfg.spec);
    const FactorData fd = build_factor_data(p, cfg.seed);
    Sink sink(cfg.output, out);
    if (cfg.format == "json") {
        nlohmann::json j = header("factor", p);
        j["base"] = to_json(fd.base);
        j["factors"] = nlohmann::json::array();
        for (std::size_t i = 0; i < fd.size(); ++i) {
            j["factors"].push_back({{"index", i},
                                    {"degree", fd.factors[i].degree},
                                    {"f", to_json(fd.factors[i].f)},
                                    {"cofactor", to_json(fd.cofactors[i])},
                                    {"idempotent", to_json(fd.idempotents[i])}});
        }
        j["idempotents_ok"] = idempotent_identities_hold(p.F(), fd);
        dump(sink.os(), j);
        return kExitOk;
    }
    std::ostream& os = sink.os();
    os << "x^" << p.n << " + " << p.delta0.bits << " over GF(2^" << p.m << "): " << fd.size() << " factor(s)\n";
    for (std::size_t i = 0; i < fd.size(); ++i) {
        os << "f_" << i << " degree " << fd.factors[i].degree << ": " << fd.factors[i].f.to_string() << '\n';
    }
    for (std::size_t i = 0; i < fd.size(); ++i) {
        os << "eps_" << i << ": " << fd.idempotents[i].to_string() << '\n';
    }
    return kExitOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const Params p = make_params(cfg.spec);
    const FactorData fd = build_factor_data(p, cfg.seed);
    const CodeCount cc = count_codes(p, fd);
    Sink sink(cfg.output, out);
    if (cfg.format == "json") {
        nlohmann::json j = header("count", p);
        j["factors"] = nlohmann::json::array();
        for (std::size_t i = 0; i < fd.size(); ++i) {
            j["factors"].push_back({{"index", i},
                                    {"degree", fd.factors[i].degree},
                                    {"sum_form", to_decimal(cc.per_factor_sum[i])},
                                    {"closed_form", to_decimal(cc.per_factor_closed[i])}});
        }
        j["total"] = to_decimal(cc.total);
        dump(sink.os(), j);
        return kExitOk;
    }
    std::ostream& os = sink.os();
    for (std::size_t i = 0; i < fd.size(); ++i) {
        os << "factor " << i << " degree " << fd.factors[i].degree << ": sum " << to_decimal(cc.per_factor_sum[i])
           << " closed " << to_decimal(cc.per_factor_closed[i]) << '\n';
    }
    os << "total " << to_decimal(cc.total) << '\n';
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format != "json" && cfg.format != "csv") throw Invalid("enumerate --format must be json or csv");
    if (cfg.format == "csv" && cfg.generators) throw Invalid("csv output has no generator columns");
    const Params p = make_params(cfg.spec);
    const CodeSystem sys = build_code_system(p, cfg.seed);
    std::optional<AmbientRing> ring;
    if (cfg.generators) ring.emplace(p);
    CodeStream stream(sys);
    stream.skip(cfg.offset);

    Sink sink(cfg.output, out);
    std::ostream& os = sink.os();
    std::uint64_t index = cfg.offset;
    std::uint64_t emitted = 0;
    const bool json = cfg.format == "json";
    if (json) {
        nlohmann::json h = header("enumerate", p);
        h["offset"] = cfg.offset;
        h["total"] = to_decimal(count_codes(p, sys.factors).total);
        std::string text = h.dump();
        text.pop_back();
        os << text << ",\"codes\":[";
    } else {
        os << csv_header() << '\n';
    }
    while (cfg.limit == 0 || emitted < cfg.limit) {
        auto code = stream.next();
        if (!code) break;
        if (json) {
            nlohmann::json c = {{"index", index},
                                {"components", to_json(*code)},
                                {"size", to_decimal(code_size(*code, sys))}};
            if (cfg.generators) {
                nlohmann::json gens = nlohmann::json::array();
                for (const auto& d : code->components) {
                    const ChainCtx& ctx = sys.chains[static_cast<std::size_t>(d.j)];
                    for (const auto& g : descriptor_generators(d, ctx, p)) {
                        gens.push_back(to_json(ring->psi_lift(lift_component(g, d.j, sys, *ring))));
                    }
                }
                c["generators"] = std::move(gens);
            }
            os << (emitted == 0 ? "\n" : ",\n") << c.dump();
        } else {
            for (const auto& d : code->components) os << csv_row(index, d) << '\n';
        }
        ++index;
        ++emitted;
    }
    if (json) os << "\n],\"emitted\":" << emitted << "}\n";
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    const Params p = make_params(cfg.spec);
    const CodeSystem sys = build_code_system(p, cfg.seed);
    const AmbientRing ring(p);
    const int D = ring.f2_dim();
    OracleStats stats;
    const std::vector<Subspace> oracle = brute_force_ideals(ring, cfg.oracle_dim_cap, cfg.threads, &stats);
    const std::set<Subspace> oracle_set(oracle.begin(), oracle.end());

    std::set<Subspace> enumerated;
    std::uint64_t descriptors = 0;
    std::uint64_t size_mismatches = 0;
    std::uint64_t not_constacyclic = 0;
    CodeStream stream(sys);
    while (auto code = stream.next()) {
        ++descriptors;
        Subspace s = code_ideal(*code, sys, ring);
        if (pow2(static_cast<unsigned>(s.dim())) != code_size(*code, sys)) ++size_mismatches;
        if (!is_constacyclic(s, ring)) ++not_constacyclic;
        enumerated.insert(std::move(s));
    }
    nlohmann::json missing = nlohmann::json::array();
    nlohmann::json extra = nlohmann::json::array();
    auto basis_json = [&](const Subspace& s) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& v : s.basis()) b.push_back(to_hex(v, D));
        return b;
    };
    for (const auto& s : oracle_set) {
        if (!enumerated.contains(s)) missing.push_back(basis_json(s));
    }
    for (const auto& s : enumerated) {
        if (!oracle_set.contains(s)) extra.push_back(basis_json(s));
    }
    const BigInt predicted = count_codes(p, sys.factors).total;
    const bool pass = missing.empty() && extra.empty() && enumerated.size() == descriptors &&
                      size_mismatches == 0 && not_constacyclic == 0 && BigInt(oracle.size()) == predicted;

    Sink sink(cfg.output, out);
    if (cfg.format == "json") {
        nlohmann::json j = header("oracle", p);
        j["f2_dimension"] = D;
        j["oracle_ideals"] = oracle.size();
        j["principal_ideals"] = stats.principal_ideals;
        j["sum_rounds"] = stats.sum_rounds;
        j["predicted"] = to_decimal(predicted);
        j["descriptors"] = descriptors;
        j["distinct_enumerated"] = enumerated.size();
        j["size_mismatches"] = size_mismatches;
        j["not_constacyclic"] = not_constacyclic;
        j["missing"] = missing;
        j["extra"] = extra;
        if (cfg.list_ideals) {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& s : oracle) {
                nlohmann::json gens = nlohmann::json::array();
                for (const auto& g : recover_generators(s, ring)) gens.push_back(to_json(g));
                list.push_back({{"f2_dimension", s.dim()},
                                {"codewords", to_decimal(pow2(static_cast<unsigned>(s.dim())))},
                                {"generators", gens},
                                {"basis", basis_json(s)}});
            }
            j["ideals"] = std::move(list);
        }
        j["status"] = pass ? "PASS" : "FAIL";
        dump(sink.os(), j);
    } else {
        std::ostream& os = sink.os();
        os << "oracle ideals " << oracle.size() << " (principal " << stats.principal_ideals << ")\n";
        os << "predicted " << to_decimal(predicted) << '\n';
        os << "descriptors " << descriptors << " distinct " << enumerated.size() << '\n';
        os << "missing " << missing.size() << " extra " << extra.size() << " size mismatches " << size_mismatches
           << " not constacyclic " << not_constacyclic << '\n';
        os << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitOk : kExitMismatch;
}

int cmd_selfdual(const RunConfig& cfg, std::ostream& out) {
    const Params p = make_params(cfg.spec);
    const CodeSystem sys = build_code_system(p, cfg.seed);
    const AmbientRing ring(p);
    const std::vector<SelfDualEntry> list = list_self_dual_length4(sys, ring);
    const BigInt expected = self_dual_count_length4(p.m);

    std::vector<bool> verified(list.size(), false);
    std::set<Subspace> listed;
    const bool can_verify = cfg.verify_dual && ring.linear_available();
    if (can_verify) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Subspace c = ring.ideal_of(list[i].generators);
            verified[i] = is_self_dual(c, ring);
            listed.insert(c);
        }
    }
    bool pass = BigInt(list.size()) == expected;
    std::set<IdealDescriptor> distinct;
    for (const auto& e : list) distinct.insert(e.descriptor);
    pass = pass && distinct.size() == list.size();
    if (can_verify) {
        for (bool v : verified) pass = pass && v;
        pass = pass && listed.size() == list.size();
    }

    // Exhaustive sweep over every enumerated code when there are few enough.
    constexpr std::uint64_t kSweepLimit = 20000;
    std::optional<std::uint64_t> sweep_count;
    bool sweep_match = true;
    if (can_verify && count_codes(p, sys.factors).total <= kSweepLimit) {
        std::set<Subspace> found;
        CodeStream stream(sys);
        while (auto code = stream.next()) {
            Subspace s = code_ideal(*code, sys, ring);
            if (is_self_dual(s, ring)) found.insert(std::move(s));
        }
        sweep_count = found.size();
        sweep_match = found == listed;
        pass = pass && sweep_match;
    }
    std::optional<bool> explicit_match;
    if (can_verify && p.m == 1 && p.alpha == kOne) {
        std::set<Subspace> ex;
        for (const auto& gens : explicit_self_dual_list_m1(ring)) ex.insert(ring.ideal_of(gens));
        explicit_match = ex == listed;
        pass = pass && *explicit_match;
    }

    Sink sink(cfg.output, out);
    if (cfg.format == "json") {
        nlohmann::json j = header("selfdual", p);
        j["expected"] = to_decimal(expected);
        j["count"] = list.size();
        nlohmann::json codes = nlohmann::json::array();
        for (std::size_t i = 0; i < list.size(); ++i) {
            nlohmann::json gens = nlohmann::json::array();
            for (const auto& g : list[i].generators) gens.push_back(to_json(g));
            nlohmann::json c = {{"case", list[i].case_index},
                                {"generators", gens},
                                {"descriptor", to_json(list[i].descriptor)}};
            if (can_verify) c["self_dual"] = static_cast<bool>(verified[i]);
            codes.push_back(std::move(c));
        }
        j["codes"] = std::move(codes);
        if (sweep_count) j["exhaustive_self_dual"] = *sweep_count;
        if (explicit_match) j["explicit_list_match"] = *explicit_match;
        j["status"] = pass ? "PASS" : "FAIL";
        dump(sink.os(), j);
    } else {
        std::ostream& os = sink.os();
        for (std::size_t i = 0; i < list.size(); ++i) {
            os << "case " << list[i].case_index << ": <";
            for (std::size_t g = 0; g < list[i].generators.size(); ++g) {
                os << (g ? ", " : "") << to_string(list[i].generators[g]);
            }
            const auto& d = list[i].descriptor;
            os << "> family F" << static_cast<int>(d.family) << " s=" << d.s << " t=" << d.t;
            if (can_verify) os << (verified[i] ? " self-dual" : " NOT self-dual");
            os << '\n';
        }
        os << "count " << list.size() << " expected " << to_decimal(expected) << '\n';
        if (sweep_count) os << "exhaustive self-dual " << *sweep_count << '\n';
        if (explicit_match) os << "explicit list " << (*explicit_match ? "match" : "MISMATCH") << '\n';
        os << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Constacyclic codes over F_{2^m}[u]/<u^{2 lambda}>", "chaincodes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint32_t reduction = 0;
    std::string threads_text;
    app.add_option("--m", cfg.spec.m, "extension degree of the residue field")->capture_default_str();
    app.add_option("--n", cfg.spec.n, "odd part of the length")->capture_default_str();
    app.add_option("--k", cfg.spec.k, "length is 2^k n")->capture_default_str();
    app.add_option("--lambda", cfg.spec.lambda, "R = F_{2^m}[u]/<u^{2 lambda}>")->capture_default_str();
    app.add_option("--delta", cfg.spec.delta, "delta as a bit pattern")->capture_default_str();
    app.add_option("--alpha", cfg.spec.alpha, "alpha as a bit pattern")->capture_default_str();
    auto* red = app.add_option("--reduction", reduction, "reduction polynomial of F_{2^m} as a bit pattern");
    app.add_option("--seed", cfg.seed, "seed for randomized factorization")->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads (default: all cores)");
    app.add_option("--format", cfg.format, "text, json or csv");
    app.add_option("--output", cfg.output, "write the result to this file");
    app.add_option("--materialize-cap", cfg.materialize_cap, "largest code to materialize");
    app.add_option("--oracle-dim-cap", cfg.oracle_dim_cap, "largest F_2-dimension for exhaustive search");

    auto* factor = app.add_subcommand("factor", "factor x^n + delta0 and print the idempotents");
    auto* count = app.add_subcommand("count", "count all codes by both formulas");
    auto* enumerate = app.add_subcommand("enumerate", "stream code descriptors");
    enumerate->add_option("--offset", cfg.offset, "skip this many codes");
    enumerate->add_option("--limit", cfg.limit, "emit at most this many codes (0 = all)");
    enumerate->add_flag("--generators", cfg.generators, "include generators lifted to R[x]");
    auto* oracle = app.add_subcommand("oracle", "compare the enumeration with exhaustive search");
    oracle->add_flag("--ideals", cfg.list_ideals, "export every ideal with recovered generators (json)");
    auto* selfdual = app.add_subcommand("selfdual", "list and verify the self-dual codes of length 4");
    bool no_verify = false;
    selfdual->add_flag("--no-verify", no_verify, "skip dual-code verification");

    cfg.materialize_cap = env_u64("CHAINCODES_MATERIALIZE_CAP", cfg.materialize_cap);
    cfg.oracle_dim_cap = static_cast<int>(env_u64("CHAINCODES_ORACLE_DIM_CAP", static_cast<std::uint64_t>(cfg.oracle_dim_cap)));

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    if (red->count() > 0) cfg.spec.reduction = reduction;
    if (cfg.threads == 0) cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    cfg.verify_dual = !no_verify;

    try {
        if (enumerate->parsed()) {
            if (cfg.format == "text") cfg.format = "json";
            return cmd_enumerate(cfg, out);
        }
        if (cfg.format != "text" && cfg.format != "json") throw Invalid("--format must be text or json");
        if (factor->parsed()) return cmd_factor(cfg, out);
        if (count->parsed()) return cmd_count(cfg, out);
        if (oracle->parsed()) return cmd_oracle(cfg, out);
        if (selfdual->parsed()) return cmd_selfdual(cfg, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::logic_error& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitInvalid;
}

}  // namespace chaincodes
