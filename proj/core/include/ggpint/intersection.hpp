#ifndef GGPINT_INTERSECTION_HPP
#define GGPINT_INTERSECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ggpint/fp_factor.hpp"

namespace ggpint {

/// Irreducible factors of a self-reciprocal P sorted into the three roles
/// they play in the counting formula.
struct FactorClassification {
    /// Self-reciprocal factors with odd multiplicity (the Q candidates).
    std::vector<std::pair<FpPoly, int>> q_candidates;
    /// Self-reciprocal factors with even multiplicity.
    std::vector<std::pair<FpPoly, int>> even_selfrec;
    /// Unordered pairs {R, R*}, keyed by the smaller member; multiplicity
    /// is the common m(R) = m(R*).
    std::vector<std::pair<std::pair<FpPoly, FpPoly>, int>> pairs;
};

/// Classify the irreducible factors of a monic self-reciprocal P with
/// P(0) != 0. Raises NotSelfReciprocal otherwise.
FactorClassification classify_factors(const FpPoly& P, uint64_t seed = 1);

/// The unique self-reciprocal monic irreducible factor of odd multiplicity
/// when exactly one exists; otherwise nullopt (the intersection is empty).
std::optional<FpPoly> nonempty_Q(const FpPoly& P, uint64_t seed = 1);

/// Number of k-points: deg Q * prod over unordered pairs {R, R*} of
/// (1 + m(R)); 0 when the nonemptiness criterion fails.
long point_count(const FpPoly& P, uint64_t seed = 1);

/// Intersection multiplicity c = (m(Q) + 1) / 2; requires nonempty_Q.
int length_c(const FpPoly& P, uint64_t seed = 1);

/// The full closed-form answer for one reduced instance.
struct IntersectionReport {
    bool nonempty = false;
    std::optional<FpPoly> Q;
    std::optional<int> mQ;
    long point_count = 0;
    /// Literal per-factor reading of the product (counts R and R*
    /// separately); recorded when it differs from point_count.
    std::optional<long> point_count_per_factor;
    std::optional<int> c;
    std::optional<long> total;
    bool p_gt_c = false;
    std::vector<std::string> notes;
};

IntersectionReport intersection_number(const FpPoly& P, int64_t p, uint64_t seed = 1);

}  // namespace ggpint

#endif
