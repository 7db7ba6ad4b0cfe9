#ifndef GGPINT_ORACLE_HPP
#define GGPINT_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ggpint/ext_field.hpp"
#include "ggpint/fp_matrix.hpp"
#include "ggpint/instance.hpp"
#include "ggpint/intersection.hpp"
#include "ggpint/padic.hpp"

namespace ggpint {

/// One invariant subspace U of the cyclic module, cut out by a monic
/// divisor D | P (U = image of D(gbar); the action on U has characteristic
/// polynomial P/D).
struct Stratum {
    FpPoly divisor;
    FpMatrix u_basis;      // t x dim(U), columns spanning U
    bool isotropic = false;
    // The remaining fields are filled for isotropic U only.
    FpPoly middle;         // char poly of the induced action on Uperp/U
    int type = 0;          // t' = deg middle = dim Uperp/U
    bool nonempty = false; // middle irreducible
    FpMatrix quotient_gram;
    FpMatrix quotient_g;
};

/// A vector whose gbar-orbit spans the whole space; sampled randomly with
/// a rank certificate. Requires min poly = char poly (raises NotCyclic).
std::vector<int64_t> cyclic_generator(const ReducedInstance& red, uint64_t seed = 7);

/// All gbar-invariant subspaces via the divisor lattice of P, each tested
/// for isotropy; isotropic strata carry the induced quadratic space and
/// isometry on Uperp/U and the nonemptiness flag.
std::vector<Stratum> enumerate_strata(const ReducedInstance& red, uint64_t seed = 7);

/// Brute-force point count: sum of t' over the nonempty strata (two
/// Deligne--Lusztig components, each with t'/2 Coxeter fixed points).
/// Every nonempty stratum with t'/2 <= 3 is independently re-counted by
/// dl_fixed_count; a mismatch is an internal error.
long oracle_point_count(const ReducedInstance& red, uint64_t seed = 7);

/// Counts the g0-invariant Lagrangians L of the quadratic space over
/// F_{p^{2d'}} (extended by `field_multiplier` if > 1) with
/// dim(L + Frob L) = d' + 1, by picking one eigenline per inverse-pair of
/// eigenvalues. Requires char poly of g0 irreducible of even degree <= 6.
int dl_fixed_count(const FpMatrix& gram, const FpMatrix& g0, int field_multiplier = 1);

/// Jordan-shaped local model at a fixed point: the matrix of the isometry
/// on the d-dimensional space Frob L_d is [[H1, H2], [0, H4]] with H1
/// upper-triangular Jordan, one block per eigenvalue, and the block of
/// eigenvalue H4 (size c-1) placed last.
struct JordanData {
    int64_t p = 3;
    int d = 1;
    FpMatrix h1;               // (d-1) x (d-1)
    std::vector<int64_t> h2;   // length d-1
    int64_t h4 = 0;            // the eigenvalue lambda

    /// The full d x d matrix [[H1,H2],[0,H4]].
    FpMatrix full() const;
    /// Size of the Jordan block of eigenvalue h4 in full().
    int block_size_c() const;
    void validate() const;
};

/// dim_k k[r]/(I + m^M) for the quadratic equations
/// sum_i r_i H1[i][j] + (r.H2) r_j - H4 r_j, truncation raised until the
/// dimension stabilizes (cap M = d + 4; NotStabilized beyond it).
long local_ring_length(const JordanData& jd);

/// Random JordanData with lambda-block size c-1 and all other Jordan
/// blocks of distinct eigenvalues != lambda. p <= c is allowed (the
/// caller decides whether the multiplicity theorem applies).
JordanData gen_jordan(int c, int d, int64_t p, uint64_t seed);

/// Search-based Hilbert symbol: solvability of ax^2 + by^2 = z^2 over Q_p
/// via a primitive solution mod p^3 on square-class representatives.
int hilbert_symbol_bruteforce(const PadicScalar& a, const PadicScalar& b);

/// Everything the oracles said about one closed-form report.
struct OracleAgreement {
    long oracle_count = 0;
    bool count_agrees = false;
    int strata_total = 0;
    int strata_nonempty = 0;
    bool dl_checked = false;
    bool dl_agrees = true;
    bool mult_checked = false;
    bool mult_agrees = true;
    std::vector<std::string> notes;

    bool all_agree() const { return count_agrees && dl_agrees && mult_agrees; }
};

/// Runs the full oracle battery against a closed-form report for `red`.
OracleAgreement crosscheck(const ReducedInstance& red, const IntersectionReport& rep,
                           uint64_t seed = 7);

}  // namespace ggpint

#endif
