#ifndef GGPINT_FP_POLY_HPP
#define GGPINT_FP_POLY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ggpint/fp.hpp"

namespace ggpint {

/// Dense univariate polynomial over F_p, coefficients stored low-to-high
/// with no trailing zeros. The zero polynomial has an empty coefficient
/// vector and degree -1.
class FpPoly {
public:
    FpPoly() : p_(3) {}
    explicit FpPoly(int64_t p) : p_(p) { require_odd_prime(p); }
    FpPoly(int64_t p, std::vector<int64_t> coeffs);

    static FpPoly zero(int64_t p) { return FpPoly(p); }
    static FpPoly one(int64_t p) { return FpPoly(p, {1}); }
    static FpPoly constant(int64_t p, int64_t c) { return FpPoly(p, {c}); }
    /// The monomial T.
    static FpPoly var(int64_t p) { return FpPoly(p, {0, 1}); }
    /// c0 + c1 T + ... given low-to-high, any representatives.
    static FpPoly of(int64_t p, std::initializer_list<int64_t> coeffs) {
        return FpPoly(p, std::vector<int64_t>(coeffs));
    }

    int64_t p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    int64_t coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i];
    }
    int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    int64_t constant_term() const { return coeff(0); }
    const std::vector<int64_t>& coeffs() const { return c_; }

    int64_t eval(int64_t x) const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator*(int64_t s) const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    /// Total order used for deterministic keying: by degree, then by the
    /// coefficient vector read low-to-high.
    bool operator<(const FpPoly& o) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
    FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }
    FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }
    bool divides(const FpPoly& f) const { return !is_zero() && (f % *this).is_zero(); }

    FpPoly monic() const;
    FpPoly derivative() const;
    FpPoly pow(int64_t e) const;

    std::string to_string(const std::string& var = "T") const;

private:
    void trim();

    int64_t p_;
    std::vector<int64_t> c_;
};

FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m, by square-and-multiply on residues mod m.
FpPoly powmod_ui(const FpPoly& base, uint64_t e, const FpPoly& m);
/// base^(p^k) mod m using repeated p-th powering.
FpPoly frobenius_powmod(const FpPoly& base, int64_t p, int k, const FpPoly& m);

/// T^deg(R) * R(1/T), monically normalized. Requires R monic, R(0) != 0.
FpPoly poly_reciprocal(const FpPoly& r);
bool is_self_reciprocal(const FpPoly& r);

bool is_irreducible(const FpPoly& f);

/// Uniformly random monic polynomial of exactly the given degree.
FpPoly random_monic(int64_t p, int degree, std::mt19937_64& rng);
/// Random monic irreducible of exactly the given degree.
FpPoly random_irreducible(int64_t p, int degree, std::mt19937_64& rng);

}  // namespace ggpint

#endif
