#ifndef GGPINT_INSTANCE_HPP
#define GGPINT_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ggpint/fp_matrix.hpp"
#include "ggpint/padic_matrix.hpp"
#include "ggpint/quadform.hpp"

namespace ggpint {

inline constexpr int kDefaultPrecision = 24;

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<Verdict>& vs);

/// Full p-adic input layer: a nondegenerate quadratic space (V, q) of rank
/// n >= 4 over Q_p with Gram matrix `gram` (convention <u,v> = u^T gram v,
/// q(v) = <v,v>), an isometry g, and a distinguished vector x with q(x)=1.
struct FullInstance {
    int64_t p = 3;
    int precision = kDefaultPrecision;
    size_t n = 0;
    PadicMatrix gram;
    PadicMatrix g;
    std::vector<PadicScalar> x;

    /// Checks the structural invariants (shape, symmetry, isometry,
    /// q(x) = 1, n >= 4); throws ValidationError on failure.
    void validate() const;
    /// Non-fatal checks: the modeled space should have Hasse invariant -1.
    std::vector<Verdict> warnings() const;
};

/// Reduced finite-field layer: the quadratic space Omega_0 = L^dual/L with
/// the induced isometry and its characteristic polynomial. All the
/// closed-form answers are functions of this data.
struct ReducedInstance {
    int64_t p = 3;
    size_t t = 0;
    FpMatrix omega_gram;
    FpMatrix gbar;
    FpPoly P;
};

/// Everything the reduction chose along the way, for reproducibility.
struct DerivationLog {
    PadicMatrix fundamental;       // T = (<g^i x, g^j x>)
    std::vector<long> invariants;  // Smith/Cartan invariants of T
    PadicMatrix orbit_basis;       // columns x, gx, ..., g^{n-1} x
    PadicMatrix lattice_basis;     // adapted basis of L(g)
    PadicMatrix dual_basis;        // adapted basis of L(g)^dual
    std::vector<Verdict> verdicts;
};

/// T(v(g)) with entries <g^i x, g^j x>, 0 <= i, j < n. Symmetric.
PadicMatrix fundamental_matrix(const FullInstance& inst);

/// True iff det T has finite valuation certified below the precision
/// (equivalently x, gx, ..., g^{n-1}x is a basis).
bool is_regular_semisimple(const FullInstance& inst);

/// True iff the Cartan invariants of T satisfy r_1 = 1 and r_n >= 0.
bool is_minuscule(const FullInstance& inst);

/// The reduction: builds L(g) and its dual from the orbit basis, adapts
/// them by the Smith transforms, and extracts Omega_0 = L^dual/L with the
/// induced form (p * <.,.> mod p) and isometry. Errors: NotMinuscule,
/// GDoesNotStabilize, SplitOmega, PrecisionExhausted.
std::pair<ReducedInstance, DerivationLog> reduce_instance(const FullInstance& inst);

/// Named pass/fail checks of every ReducedInstance invariant.
std::vector<Verdict> validate_reduced(const ReducedInstance& red);

/// Hyperbolic-split test for a nondegenerate symmetric form of even
/// dimension 2d over F_p: split iff (-1)^d det is a square.
bool is_split_fp(const FpMatrix& gram);

/// Largest admissible type of a vertex lattice in a space of rank n whose
/// determinant lies in the given square class.
int t_max(int n, const SquareClass& det_class, int64_t p);

/// Shape of one block of the characteristic polynomial handed to the
/// generators.
struct FactorShape {
    enum class Kind {
        SelfReciprocal,      // the distinguished Q; multiplicity must be odd
        Pair,                // a pair {R, R*}, contributing (R R*)^mult
        EvenSelfReciprocal,  // a self-reciprocal factor of even multiplicity
    };
    Kind kind = Kind::SelfReciprocal;
    int degree = 2;
    int multiplicity = 1;
};

/// Random valid ReducedInstance realizing the shape: P is assembled from
/// freshly sampled irreducibles, gbar is the companion matrix, and the
/// form is a random gbar-invariant symmetric matrix, resampled until
/// nondegenerate and non-split (ShapeInfeasible after 64 attempts).
ReducedInstance gen_reduced(int64_t p, const std::vector<FactorShape>& shape, uint64_t seed);

/// Random valid FullInstance of rank n whose reduction has the given
/// shape (total shape degree t < n). Built as an orthogonal sum of a
/// unimodular piece and a p-scaled piece, both cyclic isometries.
FullInstance gen_full(int64_t p, size_t n, const std::vector<FactorShape>& shape, uint64_t seed,
                      int precision = kDefaultPrecision);

/// Base change by a p-integral unimodular matrix with integer entries:
/// gram -> M^T gram M, g -> M^{-1} g M, x -> M^{-1} x. The abstract
/// instance, hence every derived quantity, is unchanged.
FullInstance conjugate_instance(const FullInstance& inst, const FpMatrix& m_int);

}  // namespace ggpint

#endif
