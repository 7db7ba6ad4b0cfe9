#ifndef GGPINT_FP_FACTOR_HPP
#define GGPINT_FP_FACTOR_HPP

#include <random>
#include <vector>

#include "ggpint/fp_poly.hpp"

namespace ggpint {

/// Multiset of monic irreducible factors with multiplicities. Factors are
/// kept sorted (FpPoly::operator<) and pairwise distinct; the product of
/// factor^multiplicity reproduces the factored polynomial exactly.
struct FactorList {
    int64_t p = 3;
    std::vector<std::pair<FpPoly, int>> factors;

    /// Multiplicity of f in the list (0 if absent).
    int multiplicity(const FpPoly& f) const;
    FpPoly product() const;
    int total_degree() const;
};

/// Complete factorization of a monic polynomial of degree >= 1 into monic
/// irreducibles: squarefree decomposition, then distinct-degree splitting,
/// then randomized equal-degree splitting (Cantor--Zassenhaus, odd p).
/// The seed makes the equal-degree stage reproducible; the returned list
/// does not depend on it.
FactorList poly_factorize(const FpPoly& f, uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace ggpint

#endif
