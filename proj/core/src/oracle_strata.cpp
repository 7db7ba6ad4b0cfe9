#include <algorithm>

#include "ggpint/oracle.hpp"

namespace ggpint {

std::vector<int64_t> cyclic_generator(const ReducedInstance& red, uint64_t seed) {
    const int64_t p = red.p;
    const size_t t = red.t;
    if (matrix_min_poly(red.gbar) != matrix_char_poly(red.gbar))
        throw not_cyclic("gbar has minimal polynomial different from its characteristic "
                         "polynomial");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> dist(0, p - 1);
    for (int tries = 0; tries < 256; ++tries) {
        std::vector<int64_t> w(t);
        for (auto& c : w) c = dist(rng);
        // Krylov rank certificate.
        FpMatrix k(p, t, t);
        std::vector<int64_t> v = w;
        for (size_t j = 0; j < t; ++j) {
            for (size_t i = 0; i < t; ++i) k.set(i, j, v[i]);
            if (j + 1 < t) v = red.gbar.apply(v);
        }
        if (k.rank() == t) return w;
    }
    throw not_cyclic("no cyclic generator found within the sampling budget");
}

namespace {

struct QuotientSpace {
    FpMatrix gram;
    FpMatrix action;
};

/// Induced form and action on Uperp/U for totally isotropic invariant U.
QuotientSpace quotient_data(const ReducedInstance& red, const FpMatrix& u_basis,
                            const std::vector<std::vector<int64_t>>& uperp) {
    const int64_t p = red.p;
    const size_t t = red.t;
    const size_t k = u_basis.cols();
    const size_t tprime = uperp.size() - k;

    // Extend the U basis by vectors of Uperp to a basis of Uperp.
    FpMatrix ext(p, t, uperp.size());
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < t; ++i) ext.set(i, j, u_basis.at(i, j));
    size_t filled = k;
    for (const auto& w : uperp) {
        if (filled == uperp.size()) break;
        FpMatrix trial(p, t, filled + 1);
        for (size_t j = 0; j < filled; ++j)
            for (size_t i = 0; i < t; ++i) trial.set(i, j, ext.at(i, j));
        for (size_t i = 0; i < t; ++i) trial.set(i, filled, w[i]);
        if (trial.rank() == filled + 1) {
            for (size_t i = 0; i < t; ++i) ext.set(i, filled, w[i]);
            ++filled;
        }
    }
    if (filled != uperp.size())
        throw InternalError("QuotientBasis", "could not extend U to a basis of Uperp");

    QuotientSpace q{FpMatrix(p, tprime, tprime), FpMatrix(p, tprime, tprime)};
    // Gram of the quotient representatives.
    for (size_t i = 0; i < tprime; ++i)
        for (size_t j = 0; j < tprime; ++j) {
            int64_t acc = 0;
            for (size_t a = 0; a < t; ++a)
                for (size_t b = 0; b < t; ++b)
                    acc = (acc + ext.at(a, k + i) * red.omega_gram.at(a, b) % p *
                                     ext.at(b, k + j)) %
                          p;
            q.gram.set(i, j, acc);
        }
    // Induced action: solve ext * a = gbar * rep_j, read the quotient rows.
    for (size_t j = 0; j < tprime; ++j) {
        std::vector<int64_t> rep(t);
        for (size_t i = 0; i < t; ++i) rep[i] = ext.at(i, k + j);
        auto img = red.gbar.apply(rep);
        auto sol = ext.solve(img);
        if (!sol)
            throw InternalError("QuotientAction", "gbar does not stabilize Uperp");
        for (size_t i = 0; i < tprime; ++i) q.action.set(i, j, (*sol)[k + i]);
    }
    return q;
}

}  // namespace

std::vector<Stratum> enumerate_strata(const ReducedInstance& red, uint64_t seed) {
    const auto verdicts = validate_reduced(red);
    if (!all_pass(verdicts)) {
        std::string bad;
        for (const auto& v : verdicts)
            if (!v.pass) bad += v.name + " ";
        throw ValidationError("InvalidReducedInstance", "instance fails validation: " + bad);
    }
    const int64_t p = red.p;
    const size_t t = red.t;
    const FactorList fl = poly_factorize(red.P, seed);

    // All monic divisors D of P by exponent vectors over the factor list.
    std::vector<FpPoly> divisors{FpPoly::one(p)};
    for (const auto& [f, m] : fl.factors) {
        std::vector<FpPoly> next;
        FpPoly power = FpPoly::one(p);
        for (int e = 0; e <= m; ++e) {
            for (const auto& d : divisors) next.push_back(d * power);
            power = power * f;
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end());

    std::vector<Stratum> out;
    for (const auto& d : divisors) {
        Stratum s;
        s.divisor = d;
        const FpMatrix image = poly_at_matrix(d, red.gbar);
        const auto cols = image.column_space_basis();
        FpMatrix u(p, t, cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < t; ++i) u.set(i, j, cols[j][i]);
        s.u_basis = u;
        if (int(t - cols.size()) != d.degree())
            throw InternalError("DivisorDimension",
                                "dim U != t - deg D on a validated instance");

        // Total isotropy: the form vanishes on U x U (odd p).
        s.isotropic = (u.transpose() * red.omega_gram * u).is_zero();
        if (!s.isotropic) {
            out.push_back(std::move(s));
            continue;
        }

        // Uperp = kernel of u^T gram.
        const auto uperp = (u.transpose() * red.omega_gram).nullspace();
        if (uperp.size() != t - cols.size())
            throw InternalError("PerpDimension", "dim Uperp != t - dim U");

        QuotientSpace q = quotient_data(red, u, uperp);
        s.middle = matrix_char_poly(q.action);
        s.type = s.middle.degree();
        s.quotient_gram = q.gram;
        s.quotient_g = q.action;
        s.nonempty = s.type >= 1 && is_irreducible(s.middle);

        // Bookkeeping identity (P/D) (P/D)* Q' = P.
        const FpPoly p1 = red.P / d;
        if (p1 * poly_reciprocal(p1) * s.middle != red.P)
            throw InternalError("FiltrationFactorization",
                                "(P/D) (P/D)* Q' != P for an isotropic stratum");
        out.push_back(std::move(s));
    }
    return out;
}

long oracle_point_count(const ReducedInstance& red, uint64_t seed) {
    long count = 0;
    for (const auto& s : enumerate_strata(red, seed)) {
        if (!s.isotropic || !s.nonempty) continue;
        count += s.type;
        if (s.type / 2 <= 3) {
            const int dl = dl_fixed_count(s.quotient_gram, s.quotient_g);
            if (dl != s.type)
                throw InternalError("DlMismatch",
                                    "Deligne--Lusztig fixed-point count " + std::to_string(dl) +
                                        " != stratum type " + std::to_string(s.type));
        }
    }
    return count;
}

OracleAgreement crosscheck(const ReducedInstance& red, const IntersectionReport& rep,
                           uint64_t seed) {
    OracleAgreement oa;
    const auto strata = enumerate_strata(red, seed);
    oa.strata_total = int(strata.size());
    for (const auto& s : strata) {
        if (!s.isotropic || !s.nonempty) continue;
        ++oa.strata_nonempty;
        oa.oracle_count += s.type;
        if (s.type / 2 <= 3) {
            oa.dl_checked = true;
            const int dl = dl_fixed_count(s.quotient_gram, s.quotient_g);
            if (dl != s.type) {
                oa.dl_agrees = false;
                oa.notes.push_back("dl count " + std::to_string(dl) + " != type " +
                                   std::to_string(s.type) + " at divisor " +
                                   s.divisor.to_string());
            }
        }
    }
    oa.count_agrees = oa.oracle_count == rep.point_count &&
                      (oa.oracle_count > 0) == rep.nonempty;
    if (!oa.count_agrees)
        oa.notes.push_back("formula count " + std::to_string(rep.point_count) +
                           " != oracle count " + std::to_string(oa.oracle_count));

    if (rep.nonempty && rep.c) {
        const int c = *rep.c;
        if (red.p > c) {
            oa.mult_checked = true;
            const int d = int(red.t) / 2;
            if (c <= d) {
                const JordanData jd = gen_jordan(c, d, red.p, seed ^ 0x5bd1e995u);
                const long len = local_ring_length(jd);
                if (len != c) {
                    oa.mult_agrees = false;
                    oa.notes.push_back("local ring length " + std::to_string(len) +
                                       " != c = " + std::to_string(c));
                }
            } else {
                oa.mult_agrees = false;
                oa.notes.push_back("c exceeds t/2; bound violated");
            }
        } else {
            oa.notes.push_back("p <= c: multiplicity oracle skipped");
        }
    }
    return oa;
}

}  // namespace ggpint
