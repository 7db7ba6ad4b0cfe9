#include "ggpint/selftest.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "ggpint/instance_io.hpp"
#include "ggpint/oracle.hpp"

namespace ggpint {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

using Shape = std::vector<FactorShape>;
using Kind = FactorShape::Kind;

/// Shape catalog per prime; every entry has exactly one odd self-reciprocal
/// factor, total degree in {2, 4, 6}.
std::vector<Shape> shape_catalog(int64_t p) {
    std::vector<Shape> shapes{
        {{Kind::SelfReciprocal, 2, 1}},                                // t=2, Q alone
        {{Kind::SelfReciprocal, 4, 1}},                                // t=4, Q alone
        {{Kind::SelfReciprocal, 2, 1}, {Kind::EvenSelfReciprocal, 1, 2}},  // t=4
        {{Kind::SelfReciprocal, 2, 3}},                                // t=6, m(Q)=3
        {{Kind::SelfReciprocal, 2, 1}, {Kind::Pair, 2, 1}},            // t=6, Q + pair
    };
    if (p >= 5) {
        shapes.push_back({{Kind::SelfReciprocal, 2, 1}, {Kind::Pair, 1, 1}});             // t=4
        shapes.push_back({{Kind::SelfReciprocal, 2, 1}, {Kind::EvenSelfReciprocal, 2, 2}});  // t=6
    } else {
        // F_3 has a single self-reciprocal irreducible quadratic and no
        // non-self-reciprocal linear polynomials; use linear even factors.
        shapes.push_back({{Kind::SelfReciprocal, 2, 1},
                          {Kind::EvenSelfReciprocal, 1, 2},
                          {Kind::EvenSelfReciprocal, 1, 2}});  // t=6
    }
    return shapes;
}

struct GridInstance {
    ReducedInstance red;
    uint64_t seed;
};

std::vector<GridInstance> build_grid(uint64_t seed, size_t per_shape) {
    std::vector<GridInstance> grid;
    for (int64_t p : {3, 5, 7})
        for (const auto& shape : shape_catalog(p))
            for (size_t k = 0; k < per_shape; ++k) {
                const uint64_t s = seed ^ (uint64_t(p) << 32) ^ (grid.size() * 0x9e3779b9ULL);
                grid.push_back({gen_reduced(p, shape, s), s});
            }
    return grid;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* out, uint64_t seed) {
    std::vector<CriterionResult> results;
    auto report = [&](int id, const std::string& name, bool pass, const std::string& detail) {
        results.push_back({id, name, pass, detail});
        if (out)
            *out << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name
                 << "): " << detail << "\n";
    };

    // ---- Criterion 1: count equivalence over the generated grid. ----------
    std::vector<GridInstance> grid;
    {
        const auto t0 = Clock::now();
        size_t checked = 0, mismatches = 0;
        std::string first_bad;
        grid = build_grid(seed, 12);
        for (const auto& gi : grid) {
            const long formula = point_count(gi.red.P);
            const long oracle = oracle_point_count(gi.red, gi.seed);
            const bool has_q = nonempty_Q(gi.red.P).has_value();
            ++checked;
            if (formula != oracle || has_q != (oracle > 0)) {
                ++mismatches;
                if (first_bad.empty())
                    first_bad = " first mismatch: formula " + std::to_string(formula) +
                                " vs oracle " + std::to_string(oracle) + " (P = " +
                                gi.red.P.to_string() + " over F_" + std::to_string(gi.red.p) +
                                ")";
            }
        }
        const double dt = seconds_since(t0);
        std::ostringstream d;
        d << checked << " instances, " << mismatches << " mismatches, " << dt << " s";
        report(1, "count equivalence", checked >= 200 && mismatches == 0 && dt < 60.0,
               d.str() + first_bad);
    }

    // ---- Criterion 2: Coxeter fixed-point counts on every nonempty stratum.
    {
        size_t checked = 0, mismatches = 0;
        for (const auto& gi : grid)
            for (const auto& s : enumerate_strata(gi.red, gi.seed)) {
                if (!s.isotropic || !s.nonempty || s.type / 2 > 3) continue;
                ++checked;
                if (dl_fixed_count(s.quotient_gram, s.quotient_g) != s.type) ++mismatches;
            }
        report(2, "Coxeter fixed-point count", checked > 0 && mismatches == 0,
               std::to_string(checked) + " nonempty strata, " + std::to_string(mismatches) +
                   " mismatches");
    }

    // ---- Criterion 3: multiplicity via the local-ring oracle. -------------
    {
        size_t checked = 0, mismatches = 0;
        for (int c = 1; c <= 4; ++c)
            for (int d = c; d <= 5; ++d)
                for (int64_t p : {5, 7, 11}) {
                    if (p <= c) continue;
                    for (int k = 0; k < 20; ++k) {
                        const uint64_t s = seed ^ (uint64_t(c) << 24) ^ (uint64_t(d) << 16) ^
                                           (uint64_t(p) << 8) ^ uint64_t(k);
                        const JordanData jd = gen_jordan(c, d, p, s);
                        ++checked;
                        if (local_ring_length(jd) != c) ++mismatches;
                    }
                }
        // Closed-form consistency on the criterion-1 grid.
        size_t formula_checked = 0, formula_bad = 0;
        for (const auto& gi : grid) {
            const auto q = nonempty_Q(gi.red.P);
            if (!q) continue;
            ++formula_checked;
            const int c = length_c(gi.red.P);
            const auto rep = intersection_number(gi.red.P, gi.red.p);
            if (!rep.mQ || c != (*rep.mQ + 1) / 2 || c < 1 || 2 * c - 1 > int(gi.red.t))
                ++formula_bad;
        }
        std::ostringstream d;
        d << checked << " Jordan grids, " << mismatches << " length mismatches; "
          << formula_checked << " closed-form checks, " << formula_bad << " bad";
        report(3, "multiplicity", checked > 0 && mismatches == 0 && formula_bad == 0, d.str());
    }

    // ---- Criterion 4: pipeline integrity on full instances. ---------------
    {
        size_t built = 0, failures = 0;
        std::string note;
        std::mt19937_64 rng(seed ^ 0xfeedULL);
        const std::vector<std::pair<size_t, Shape>> configs{
            {4, {{Kind::SelfReciprocal, 2, 1}}},
            {5, {{Kind::SelfReciprocal, 2, 1}}},
            {5, {{Kind::SelfReciprocal, 4, 1}}},
            {5, {{Kind::SelfReciprocal, 2, 1}, {Kind::EvenSelfReciprocal, 1, 2}}},
        };
        const int64_t primes[] = {3, 5, 7};
        for (int k = 0; k < 6 && failures == 0; ++k)
            for (const auto& [n, shape] : configs) {
                const uint64_t s = rng();
                try {
                    const FullInstance inst = gen_full(primes[k % 3], n, shape, s);
                    ++built;
                    const auto [red, log] = reduce_instance(inst);
                    if (!all_pass(validate_reduced(red))) throw InternalError("V", "invalid");
                    // Exact Smith reconstruction.
                    const PadicMatrix t = fundamental_matrix(inst);
                    const SmithResult sm = smith_invariants(t);
                    if (!(sm.U * t * sm.V == sm.diagonal()))
                        throw InternalError("S", "Smith reconstruction not exact");
                    // Conjugation invariance of the report.
                    std::mt19937_64 crng(s ^ 1);
                    const FpMatrix m = FpMatrix::random_invertible(inst.p, inst.n, crng);
                    const auto [red2, log2] = reduce_instance(conjugate_instance(inst, m));
                    if (red2.P != red.P)
                        throw InternalError("C", "characteristic polynomial changed");
                    if (is_split_fp(red2.omega_gram) != is_split_fp(red.omega_gram) ||
                        red2.t != red.t)
                        throw InternalError("C", "quadratic-space class changed");
                    const json r1 = report_to_json(intersection_number(red.P, red.p));
                    const json r2 = report_to_json(intersection_number(red2.P, red2.p));
                    if (r1.dump() != r2.dump())
                        throw InternalError("C", "report changed under base change");
                } catch (const Error& e) {
                    ++failures;
                    if (note.empty()) note = std::string(" first failure: ") + e.what();
                }
            }
        report(4, "pipeline integrity", built >= 20 && failures == 0,
               std::to_string(built) + " full instances, " + std::to_string(failures) +
                   " failures" + note);
    }

    // ---- Criterion 5: form invariants. -------------------------------------
    {
        size_t mismatches = 0, congruence_bad = 0;
        for (int64_t p : {3, 5, 7}) {
            const int prec = kDefaultPrecision;
            const int64_t ns = fp_nonsquare(p);
            const std::vector<PadicScalar> classes{
                PadicScalar::of_int(1, p, prec), PadicScalar::of_int(ns, p, prec),
                PadicScalar::of_int(p, p, prec), PadicScalar::of_int(p * ns, p, prec)};
            for (const auto& a : classes)
                for (const auto& b : classes)
                    if (hilbert_symbol(a, b) != hilbert_symbol_bruteforce(a, b)) ++mismatches;

            // Hasse invariance under congruence gram -> A^T gram A.
            std::mt19937_64 rng(seed ^ uint64_t(p));
            for (int k = 0; k < 8; ++k) {
                PadicMatrix gram(p, prec, 4, 4);
                std::uniform_int_distribution<int64_t> entry(-4, 4);
                for (size_t i = 0; i < 4; ++i) {
                    for (size_t j = i; j < 4; ++j) {
                        auto v = PadicScalar::of_int(entry(rng) + (i == j ? 5 : 0), p, prec);
                        if (i == j && v.is_zero()) v = PadicScalar::one(p, prec);
                        gram.set(i, j, v);
                        gram.set(j, i, v);
                    }
                }
                try {
                    (void)det_valuation(gram);
                } catch (const PrecisionError&) {
                    continue;  // degenerate sample
                }
                const FpMatrix a_int = FpMatrix::random_invertible(p, 4, rng);
                PadicMatrix a(p, prec, 4, 4);
                for (size_t i = 0; i < 4; ++i)
                    for (size_t j = 0; j < 4; ++j)
                        a.set(i, j, PadicScalar::of_int(a_int.at(i, j), p, prec));
                if (hasse_invariant(gram) != hasse_invariant(a.transpose() * gram * a))
                    ++congruence_bad;
            }
        }
        report(5, "form invariants", mismatches == 0 && congruence_bad == 0,
               "16 square-class pairs x {3,5,7}: " + std::to_string(mismatches) +
                   " symbol mismatches; " + std::to_string(congruence_bad) +
                   " Hasse congruence failures");
    }

    // ---- Criterion 6: structural guards. -----------------------------------
    {
        size_t bad = 0;
        std::string note;
        for (const auto& gi : grid) {
            if (!all_pass(validate_reduced(gi.red))) {
                ++bad;
                continue;
            }
            const FactorList fl = poly_factorize(gi.red.P, gi.seed);
            size_t divisors = 1;
            for (const auto& [f, m] : fl.factors) divisors *= size_t(m + 1);
            const auto strata = enumerate_strata(gi.red, gi.seed);
            if (strata.size() != divisors) {
                ++bad;
                if (note.empty()) note = " divisor count mismatch";
                continue;
            }
            for (const auto& s : strata)
                if (int(gi.red.t) - int(s.u_basis.cols()) != s.divisor.degree()) {
                    ++bad;
                    if (note.empty()) note = " dimension identity failed";
                }
        }
        report(6, "structural guards", bad == 0,
               std::to_string(grid.size()) + " instances, " + std::to_string(bad) +
                   " violations" + note);
    }

    return results;
}

bool acceptance_passed(const std::vector<CriterionResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace ggpint
