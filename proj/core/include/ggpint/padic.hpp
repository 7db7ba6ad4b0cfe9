#ifndef GGPINT_PADIC_HPP
#define GGPINT_PADIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ggpint/errors.hpp"

namespace ggpint {

/// Fixed-precision element of Q_p: either ZERO, or u * p^v with the unit
/// residue u kept modulo p^N, p coprime to u. N is the working precision;
/// an operation that cannot certify its result exactly at this precision
/// raises PrecisionError instead of returning an approximation.
///
/// Addition of values whose units cancel completely modulo p^N yields
/// ZERO; decision points downstream (pivot searches, valuation reads)
/// treat ZERO pessimistically and raise rather than guess.
class PadicScalar {
public:
    PadicScalar() : p_(3), prec_(1), zero_(true), v_(0) {}
    /// ZERO at the given precision.
    PadicScalar(int64_t p, int prec);
    /// u * p^v; u is reduced mod p^N and must remain a unit.
    PadicScalar(int64_t p, int prec, long v, mpz_class u);

    static PadicScalar zero(int64_t p, int prec) { return PadicScalar(p, prec); }
    static PadicScalar one(int64_t p, int prec) { return PadicScalar(p, prec, 0, 1); }
    /// num/den as an element of Q_p; den != 0. The valuation is exact;
    /// the unit is computed modulo p^N.
    static PadicScalar of_rational(const mpz_class& num, const mpz_class& den, int64_t p,
                                   int prec);
    static PadicScalar of_int(int64_t n, int64_t p, int prec) {
        return of_rational(mpz_class(n), 1, p, prec);
    }

    int64_t p() const { return p_; }
    int precision() const { return prec_; }
    bool is_zero() const { return zero_; }
    /// Exact valuation; raises on ZERO (valuation not certifiable).
    long valuation() const;
    /// Unit residue in [1, p^N); raises on ZERO.
    const mpz_class& unit() const;
    bool is_unit() const { return !zero_ && v_ == 0; }
    /// Integral means valuation >= 0 (ZERO counts as integral).
    bool is_integral() const { return zero_ || v_ >= 0; }

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator-() const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const;
    bool operator==(const PadicScalar& o) const;
    bool operator!=(const PadicScalar& o) const { return !(*this == o); }

    /// Multiplies by p^k (exact shift of the valuation).
    PadicScalar shift(long k) const;

    /// Residue mod p of the whole value; requires valuation >= 0 (ZERO -> 0).
    int64_t residue_mod_p() const;
    /// Residue of p^k * value mod p, requires v >= -k.
    int64_t shifted_residue_mod_p(long k) const;

    std::string to_string() const;

private:
    void check_compatible(const PadicScalar& o) const;
    mpz_class modulus() const;

    int64_t p_;
    int prec_;
    bool zero_;
    long v_;
    mpz_class u_;
};

}  // namespace ggpint

#endif
