// Command-line front end: analyze instances, run individual oracles,
// generate test instances, and run the acceptance grid.
//
// Exit codes: 0 success, 1 validation/input failure, 2 precision or
// internal error, 3 formula-oracle disagreement.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ggpint/instance_io.hpp"
#include "ggpint/selftest.hpp"

namespace {

using namespace ggpint;

constexpr const char* kEngine = "ggpint 0.1.0";

json read_input(const std::string& path, const std::string& inline_json) {
    std::string text;
    if (!inline_json.empty()) {
        text = inline_json;
    } else if (path == "-" || path.empty()) {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("MalformedInput", "cannot open input file " + path);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ValidationError("MalformedInput", "$: input is not valid JSON");
    return j;
}

uint64_t effective_seed(uint64_t cli_seed, bool seed_given) {
    if (!seed_given)
        if (const char* env = std::getenv("RZ_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

std::vector<FactorShape> parse_shape(const std::string& text) {
    std::vector<FactorShape> shape;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::istringstream fields(item);
        std::string kind, deg, mult;
        if (!std::getline(fields, kind, ':') || !std::getline(fields, deg, ':') ||
            !std::getline(fields, mult, ':'))
            throw ValidationError("MalformedInput",
                                  "--shape entries look like kind:degree:multiplicity");
        FactorShape fs;
        if (kind == "q" || kind == "selfrec")
            fs.kind = FactorShape::Kind::SelfReciprocal;
        else if (kind == "pair")
            fs.kind = FactorShape::Kind::Pair;
        else if (kind == "even")
            fs.kind = FactorShape::Kind::EvenSelfReciprocal;
        else
            throw ValidationError("MalformedInput",
                                  "--shape kind must be q|selfrec|pair|even, got " + kind);
        fs.degree = std::stoi(deg);
        fs.multiplicity = std::stoi(mult);
        shape.push_back(fs);
    }
    if (shape.empty()) throw ValidationError("MalformedInput", "--shape is empty");
    return shape;
}

void print_text_report(std::ostream& os, const ReducedInstance& red,
                       const IntersectionReport& rep, uint64_t seed) {
    os << "instance: p = " << red.p << ", t_Lambda = " << red.t << "\n";
    os << "P(T) = " << red.P.to_string() << "\n";
    const FactorList fl = poly_factorize(red.P, seed);
    os << "factorization:";
    for (const auto& [f, m] : fl.factors) {
        os << " (" << f.to_string() << ")";
        if (m > 1) os << "^" << m;
    }
    os << "\n";
    if (!rep.nonempty) {
        os << "nonempty: no (no unique self-reciprocal irreducible factor of odd "
              "multiplicity)\n";
        os << "point count: 0\n";
        return;
    }
    os << "nonempty: yes\n";
    os << "Q(T) = " << rep.Q->to_string() << ", m(Q(T)) = " << *rep.mQ << "\n";
    os << "point count: " << rep.point_count << "  [deg Q(T) * prod over pairs {R,R*} of "
          "(1 + m(R(T)))]\n";
    if (rep.point_count_per_factor)
        os << "  per-factor reading would give: " << *rep.point_count_per_factor << "\n";
    os << "c = (m(Q(T)) + 1)/2 = " << *rep.c << (rep.p_gt_c ? "  (p > c)" : "  (p <= c!)")
       << "\n";
    os << "intersection number: " << rep.point_count << " * " << *rep.c << " = " << *rep.total;
    if (!rep.p_gt_c) os << "  [not certified: p <= c]";
    os << "\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
}

int cmd_analyze(const json& input, bool with_oracles, bool as_json, uint64_t seed,
                int precision_override) {
    json envelope{{"command", "analyze"},
                  {"engine", kEngine},
                  {"seed", seed},
                  {"input_hash", input_hash_hex(input)}};

    auto parsed = instance_from_json(input);
    ReducedInstance red;
    if (std::holds_alternative<FullInstance>(parsed)) {
        FullInstance inst = std::get<FullInstance>(parsed);
        if (precision_override > 0) {
            // Re-read with the requested working precision.
            json adjusted = input;
            adjusted["precision"] = precision_override;
            inst = full_from_json(adjusted);
        }
        auto [r, log] = reduce_instance(inst);
        red = r;
        envelope["precision"] = inst.precision;
        envelope["reduction"] = json{{"invariants", log.invariants},
                                     {"verdicts", verdicts_to_json(log.verdicts)}};
    } else {
        red = std::get<ReducedInstance>(parsed);
        const auto verdicts = validate_reduced(red);
        envelope["validation"] = verdicts_to_json(verdicts);
        if (!all_pass(verdicts)) {
            std::string bad;
            for (const auto& v : verdicts)
                if (!v.pass) bad += v.name + " ";
            throw ValidationError("InvalidReducedInstance",
                                  "instance fails validation: " + bad);
        }
    }

    const IntersectionReport rep = intersection_number(red.P, red.p, seed);
    envelope["p"] = red.p;
    envelope["t"] = red.t;
    envelope["P"] = poly_to_json(red.P);
    envelope["report"] = report_to_json(rep);

    bool disagreement = false;
    if (with_oracles) {
        const OracleAgreement oa = crosscheck(red, rep, seed);
        envelope["oracle"] = agreement_to_json(oa);
        disagreement = !oa.all_agree();
    }

    if (as_json) {
        std::cout << envelope.dump(2) << "\n";
    } else {
        print_text_report(std::cout, red, rep, seed);
        if (with_oracles) {
            const json& oa = envelope["oracle"];
            std::cout << "oracle point count: " << oa["oracle_count"]
                      << (oa["count_agrees"].get<bool>() ? "  (agrees)" : "  (DISAGREES)")
                      << "\n";
            if (oa["dl_checked"].get<bool>())
                std::cout << "Deligne-Lusztig recount: "
                          << (oa["dl_agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
            if (oa["mult_checked"].get<bool>())
                std::cout << "local-ring multiplicity: "
                          << (oa["mult_agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
            for (const auto& n : oa["notes"]) std::cout << "oracle note: " << n << "\n";
        }
    }
    return disagreement ? 3 : 0;
}

int cmd_oracle_strata(const json& input, bool as_json, uint64_t seed) {
    const ReducedInstance red = reduced_from_json(input);
    const auto strata = enumerate_strata(red, seed);
    if (as_json) {
        std::cout << json{{"command", "oracle strata"},
                          {"engine", kEngine},
                          {"seed", seed},
                          {"input_hash", input_hash_hex(input)},
                          {"strata", strata_to_json(strata)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    long count = 0;
    for (const auto& s : strata) {
        std::cout << "D = " << s.divisor.to_string() << ": dim U = " << s.u_basis.cols();
        if (!s.isotropic) {
            std::cout << "  (not isotropic)\n";
            continue;
        }
        std::cout << "  Q' = " << s.middle.to_string() << ", t' = " << s.type
                  << (s.nonempty ? "  [nonempty]" : "  [empty]") << "\n";
        if (s.nonempty) count += s.type;
    }
    std::cout << "oracle point count: " << count << "\n";
    return 0;
}

int cmd_oracle_dl(const json& input, bool as_json, int multiplier) {
    const ReducedInstance red = reduced_from_json(input);
    const int count = dl_fixed_count(red.omega_gram, red.gbar, multiplier);
    if (as_json)
        std::cout << json{{"command", "oracle dl"},
                          {"engine", kEngine},
                          {"input_hash", input_hash_hex(input)},
                          {"fixed_points", count},
                          {"expected", red.t}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "fixed Lagrangians with dim(L + Frob L) = d' + 1: " << count
                  << " (expected t' = " << red.t << ")\n";
    return count == int(red.t) ? 0 : 3;
}

int cmd_oracle_local_ring(const json* input, int c, int d, int64_t p, uint64_t seed,
                          bool as_json) {
    JordanData jd;
    if (input)
        jd = jordan_from_json(*input);
    else
        jd = gen_jordan(c, d, p, seed);
    const long len = local_ring_length(jd);
    const int block = jd.block_size_c();
    if (as_json)
        std::cout << json{{"command", "oracle local-ring"},
                          {"engine", kEngine},
                          {"seed", seed},
                          {"jordan", jordan_to_json(jd)},
                          {"length", len},
                          {"lambda_block_size", block},
                          {"p_gt_c", jd.p > block}}
                         .dump(2)
                  << "\n";
    else {
        std::cout << "local ring length = " << len << " (lambda-block size c = " << block
                  << ")\n";
        if (jd.p <= block) std::cout << "warning: p <= c, multiplicity theorem inapplicable\n";
    }
    return 0;
}

int cmd_oracle_hilbert(const std::string& a_text, const std::string& b_text, int64_t p,
                       bool as_json) {
    const PadicScalar a = padic_from_string(a_text, p, kDefaultPrecision, "--a");
    const PadicScalar b = padic_from_string(b_text, p, kDefaultPrecision, "--b");
    const int closed = hilbert_symbol(a, b);
    const int brute = hilbert_symbol_bruteforce(a, b);
    if (as_json)
        std::cout << json{{"command", "oracle hilbert"},
                          {"engine", kEngine},
                          {"p", p},
                          {"closed_form", closed},
                          {"brute_force", brute},
                          {"agree", closed == brute}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "(" << a_text << ", " << b_text << ")_" << p << " = " << closed
                  << "; brute force: " << brute << (closed == brute ? " (agree)" : " (DISAGREE)")
                  << "\n";
    return closed == brute ? 0 : 3;
}

int cmd_gen(int64_t p, size_t n, const std::string& layer, const std::string& shape_text,
            uint64_t seed, int precision) {
    const auto shape = parse_shape(shape_text);
    if (layer == "reduced") {
        std::cout << reduced_to_json(gen_reduced(p, shape, seed)).dump(2) << "\n";
        return 0;
    }
    if (layer == "full") {
        std::cout << full_to_json(gen_full(p, n, shape, seed, precision)).dump(2) << "\n";
        return 0;
    }
    throw ValidationError("MalformedInput", "--layer must be reduced or full");
}

int cmd_selftest(uint64_t seed) {
    const auto results = run_acceptance(&std::cout, seed);
    size_t passed = 0;
    for (const auto& r : results) passed += r.pass;
    std::cout << passed << "/" << results.size() << " acceptance criteria passed\n";
    return acceptance_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic intersection numbers of GGP cycles on GSpin Rapoport-Zink "
                 "spaces (minuscule case): closed-form point counts and multiplicities with "
                 "brute-force oracles"};
    app.require_subcommand(1);

    std::string input_path, inline_json;
    uint64_t seed = 7;
    bool json_out = false, text_out = false;
    int precision = 0;

    std::vector<CLI::Option*> seed_options;
    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("input", input_path, "input JSON file (- for stdin)");
            cmd->add_option("--inline", inline_json, "inline JSON instead of a file");
        }
        seed_options.push_back(
            cmd->add_option("--seed", seed, "RNG seed (env RZ_SEED overrides the default)"));
        cmd->add_flag("--json", json_out, "machine-readable JSON output");
        cmd->add_flag("--text", text_out, "human-readable output (default)");
    };

    // analyze
    auto* analyze = app.add_subcommand("analyze", "reduce an instance and report the "
                                                  "intersection numbers");
    bool with_oracles = false;
    add_common(analyze, true);
    analyze->add_flag("--with-oracles", with_oracles, "cross-check with the brute-force "
                                                      "oracles");
    analyze->add_option("--precision", precision, "working p-adic precision for full "
                                                  "instances");

    // oracle group
    auto* oracle = app.add_subcommand("oracle", "run one brute-force oracle");
    oracle->require_subcommand(1);
    auto* strata = oracle->add_subcommand("strata", "enumerate invariant isotropic subspaces");
    add_common(strata, true);
    auto* dl = oracle->add_subcommand("dl", "count fixed Lagrangians by eigenline choices");
    int dl_multiplier = 1;
    add_common(dl, true);
    dl->add_option("--field-multiplier", dl_multiplier,
                   "enlarge the splitting field by this factor (stability check)");
    auto* local_ring = oracle->add_subcommand("local-ring", "truncated-ideal local length");
    int lr_c = 1, lr_d = 1;
    int64_t lr_p = 5;
    add_common(local_ring, true);
    local_ring->add_option("--c", lr_c, "target lambda-block size (generate mode)");
    local_ring->add_option("--d", lr_d, "dimension d (generate mode)");
    local_ring->add_option("--p", lr_p, "prime (generate mode)");
    auto* hilbert = oracle->add_subcommand("hilbert", "closed-form vs search Hilbert symbol");
    std::string ha = "1", hb = "1";
    int64_t hp = 3;
    add_common(hilbert, false);
    hilbert->add_option("--a", ha, "first argument, rational \"a\" or \"a/b\"")->required();
    hilbert->add_option("--b", hb, "second argument")->required();
    hilbert->add_option("--p", hp, "odd prime")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a valid random instance");
    int64_t gen_p = 3;
    size_t gen_n = 4;
    std::string gen_layer = "reduced", gen_shape = "q:2:1";
    add_common(gen, false);
    gen->add_option("--p", gen_p, "odd prime");
    gen->add_option("--n", gen_n, "rank of the full instance (layer full)");
    gen->add_option("--layer", gen_layer, "reduced | full");
    gen->add_option("--shape", gen_shape,
                    "factor shape, e.g. q:2:1,pair:2:1 (kind:degree:multiplicity)");
    gen->add_option("--precision", precision, "working precision for layer full");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the acceptance grid");
    add_common(selftest, false);

    CLI11_PARSE(app, argc, argv);

    bool seed_given = false;
    for (const auto* opt : seed_options) seed_given |= opt->count() > 0;
    const uint64_t eff_seed = effective_seed(seed, seed_given);
    const bool as_json = json_out && !text_out ? true : json_out;

    try {
        if (*analyze)
            return cmd_analyze(read_input(input_path, inline_json), with_oracles, as_json,
                               eff_seed, precision);
        if (*strata) return cmd_oracle_strata(read_input(input_path, inline_json), as_json,
                                              eff_seed);
        if (*dl) return cmd_oracle_dl(read_input(input_path, inline_json), as_json,
                                      dl_multiplier);
        if (*local_ring) {
            if (!input_path.empty() || !inline_json.empty()) {
                const json in = read_input(input_path, inline_json);
                return cmd_oracle_local_ring(&in, lr_c, lr_d, lr_p, eff_seed, as_json);
            }
            return cmd_oracle_local_ring(nullptr, lr_c, lr_d, lr_p, eff_seed, as_json);
        }
        if (*hilbert) return cmd_oracle_hilbert(ha, hb, hp, as_json);
        if (*gen) return cmd_gen(gen_p, gen_n, gen_layer, gen_shape, eff_seed,
                                 precision > 0 ? precision : kDefaultPrecision);
        if (*selftest) return cmd_selftest(eff_seed);
    } catch (const ValidationError& e) {
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
