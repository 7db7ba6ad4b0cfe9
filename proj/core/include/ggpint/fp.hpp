#ifndef GGPINT_FP_HPP
#define GGPINT_FP_HPP

#include <cstdint>

#include "ggpint/errors.hpp"

namespace ggpint {

// Arithmetic in the prime field F_p, p an odd prime small enough that
// products fit in int64 (p < 2^31). Elements are canonical residues in
// [0, p).

inline int64_t fp_norm(int64_t a, int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline int64_t fp_add(int64_t a, int64_t b, int64_t p) { return (a + b) % p; }
inline int64_t fp_sub(int64_t a, int64_t b, int64_t p) { return fp_norm(a - b, p); }
inline int64_t fp_mul(int64_t a, int64_t b, int64_t p) { return (a * b) % p; }
inline int64_t fp_neg(int64_t a, int64_t p) { return a == 0 ? 0 : p - a; }

int64_t fp_pow(int64_t a, int64_t e, int64_t p);
int64_t fp_inv(int64_t a, int64_t p);

/// Legendre symbol via Euler's criterion; a must be a unit.
inline int fp_legendre(int64_t a, int64_t p) {
    a = fp_norm(a, p);
    if (a == 0) throw zero_argument("legendre symbol of 0");
    return fp_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline bool fp_is_square(int64_t a, int64_t p) {
    return fp_norm(a, p) == 0 || fp_legendre(a, p) == 1;
}

/// Smallest non-square unit mod p (exists for every odd p).
int64_t fp_nonsquare(int64_t p);

bool is_odd_prime(int64_t p);

/// Rejects anything that is not an odd prime >= 3.
void require_odd_prime(int64_t p);

}  // namespace ggpint

#endif
