#include "ggpint/intersection.hpp"

#include <algorithm>

namespace ggpint {

FactorClassification classify_factors(const FpPoly& P, uint64_t seed) {
    if (!P.is_monic()) throw non_monic_input("classification requires a monic polynomial");
    if (P.constant_term() == 0)
        throw zero_constant_term("P(0) = 0: not the characteristic polynomial of an isometry");
    if (!is_self_reciprocal(P)) throw not_self_reciprocal("P is not self-reciprocal");

    const FactorList fl = poly_factorize(P, seed);
    FactorClassification out;
    std::vector<bool> consumed(fl.factors.size(), false);
    for (size_t i = 0; i < fl.factors.size(); ++i) {
        if (consumed[i]) continue;
        const auto& [f, m] = fl.factors[i];
        if (is_self_reciprocal(f)) {
            if (m % 2 == 1)
                out.q_candidates.emplace_back(f, m);
            else
                out.even_selfrec.emplace_back(f, m);
            consumed[i] = true;
            continue;
        }
        const FpPoly fstar = poly_reciprocal(f);
        size_t partner = fl.factors.size();
        for (size_t j = 0; j < fl.factors.size(); ++j)
            if (!consumed[j] && j != i && fl.factors[j].first == fstar) partner = j;
        if (partner == fl.factors.size() || fl.factors[partner].second != m)
            throw InternalError("PairMultiplicity",
                                "reciprocal partner missing or with unequal multiplicity; "
                                "P = P* should force m(R) = m(R*)");
        consumed[i] = consumed[partner] = true;
        const FpPoly& a = std::min(f, fstar);
        const FpPoly& b = std::max(f, fstar);
        out.pairs.push_back({{a, b}, m});
    }
    return out;
}

std::optional<FpPoly> nonempty_Q(const FpPoly& P, uint64_t seed) {
    const FactorClassification cls = classify_factors(P, seed);
    if (cls.q_candidates.size() != 1) return std::nullopt;
    return cls.q_candidates.front().first;
}

long point_count(const FpPoly& P, uint64_t seed) {
    const FactorClassification cls = classify_factors(P, seed);
    if (cls.q_candidates.size() != 1) return 0;
    long count = cls.q_candidates.front().first.degree();
    for (const auto& [pair, m] : cls.pairs) count *= (1 + m);
    return count;
}

int length_c(const FpPoly& P, uint64_t seed) {
    const FactorClassification cls = classify_factors(P, seed);
    if (cls.q_candidates.size() != 1)
        throw ValidationError("EmptyIntersection",
                              "multiplicity undefined: the nonemptiness criterion fails");
    const int mq = cls.q_candidates.front().second;
    return (mq + 1) / 2;
}

IntersectionReport intersection_number(const FpPoly& P, int64_t p, uint64_t seed) {
    IntersectionReport rep;
    const FactorClassification cls = classify_factors(P, seed);
    if (cls.q_candidates.size() != 1) {
        rep.nonempty = false;
        rep.point_count = 0;
        if (cls.q_candidates.empty())
            rep.notes.push_back("no self-reciprocal irreducible factor of odd multiplicity");
        else
            rep.notes.push_back(std::to_string(cls.q_candidates.size()) +
                                " odd self-reciprocal factors; uniqueness fails");
        return rep;
    }
    rep.nonempty = true;
    rep.Q = cls.q_candidates.front().first;
    rep.mQ = cls.q_candidates.front().second;
    if (*rep.mQ % 2 != 1)
        throw InternalError("OddMultiplicity", "m(Q) must be odd");

    rep.point_count = rep.Q->degree();
    long per_factor = rep.Q->degree();
    for (const auto& [pair, m] : cls.pairs) {
        rep.point_count *= (1 + m);
        per_factor *= (1 + m) * (1 + m);
    }
    if (per_factor != rep.point_count) {
        rep.point_count_per_factor = per_factor;
        rep.notes.push_back(
            "per-factor reading of the product differs; the per-pair value is the one "
            "certified by the brute-force oracle");
    }

    rep.c = (*rep.mQ + 1) / 2;
    rep.total = rep.point_count * *rep.c;
    rep.p_gt_c = p > *rep.c;
    if (!rep.p_gt_c)
        rep.notes.push_back("p <= c: the multiplicity theorem does not apply; total is not "
                            "certified");
    if (2 * *rep.c - 1 > P.degree())
        throw InternalError("MultiplicityBound", "c violates 2c - 1 <= t");
    return rep;
}

}  // namespace ggpint
