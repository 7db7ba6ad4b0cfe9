#include "ggpint/padic.hpp"

#include <sstream>

namespace ggpint {

namespace {
mpz_class pow_p(int64_t p, unsigned long e) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), e);
    return m;
}
}  // namespace

PadicScalar::PadicScalar(int64_t p, int prec) : p_(p), prec_(prec), zero_(true), v_(0) {
    if (p < 3 || p % 2 == 0) throw ValidationError("NotOddPrime", "p must be an odd prime");
    if (prec < 1) throw ValidationError("BadPrecision", "precision must be >= 1");
}

PadicScalar::PadicScalar(int64_t p, int prec, long v, mpz_class u)
    : p_(p), prec_(prec), zero_(false), v_(v), u_(std::move(u)) {
    if (p < 3 || p % 2 == 0) throw ValidationError("NotOddPrime", "p must be an odd prime");
    if (prec < 1) throw ValidationError("BadPrecision", "precision must be >= 1");
    const mpz_class m = modulus();
    u_ %= m;
    if (u_ < 0) u_ += m;
    if (u_ % p_ == 0)
        throw InternalError("UnitInvariant", "unit residue divisible by p");
}

mpz_class PadicScalar::modulus() const { return pow_p(p_, static_cast<unsigned long>(prec_)); }

PadicScalar PadicScalar::of_rational(const mpz_class& num, const mpz_class& den, int64_t p,
                                     int prec) {
    if (den == 0) throw zero_denominator("p-adic value with denominator 0");
    if (num == 0) return PadicScalar(p, prec);
    mpz_class n = num, d = den;
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        n /= p;
        ++v;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
        d /= p;
        --v;
    }
    mpz_class m = pow_p(p, static_cast<unsigned long>(prec));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InternalError("UnitInvariant", "denominator not invertible mod p^N");
    mpz_class u = (n % m) * dinv % m;
    return PadicScalar(p, prec, v, u);
}

long PadicScalar::valuation() const {
    if (zero_) throw precision_exhausted("valuation of a value that vanishes at precision");
    return v_;
}

const mpz_class& PadicScalar::unit() const {
    if (zero_) throw precision_exhausted("unit part of a value that vanishes at precision");
    return u_;
}

void PadicScalar::check_compatible(const PadicScalar& o) const {
    if (p_ != o.p_ || prec_ != o.prec_)
        throw InternalError("PrecisionMismatch", "operands carry different (p, N)");
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    check_compatible(o);
    if (zero_) return o;
    if (o.zero_) return *this;
    const long m = std::min(v_, o.v_);
    const mpz_class mod = modulus();
    mpz_class s = u_ * pow_p(p_, static_cast<unsigned long>(v_ - m)) +
                  o.u_ * pow_p(p_, static_cast<unsigned long>(o.v_ - m));
    s %= mod;
    if (s < 0) s += mod;
    if (s == 0) return PadicScalar(p_, prec_);  // vanishes at precision
    long w = 0;
    while (mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(p_))) {
        s /= p_;
        ++w;
    }
    return PadicScalar(p_, prec_, m + w, s);
}

PadicScalar PadicScalar::operator-() const {
    if (zero_) return *this;
    return PadicScalar(p_, prec_, v_, modulus() - u_);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    check_compatible(o);
    if (zero_ || o.zero_) return PadicScalar(p_, prec_);
    return PadicScalar(p_, prec_, v_ + o.v_, u_ * o.u_ % modulus());
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const {
    check_compatible(o);
    if (o.zero_)
        throw precision_exhausted("division by a value that vanishes at precision");
    if (zero_) return PadicScalar(p_, prec_);
    const mpz_class m = modulus();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), o.u_.get_mpz_t(), m.get_mpz_t());
    return PadicScalar(p_, prec_, v_ - o.v_, u_ * inv % m);
}

bool PadicScalar::operator==(const PadicScalar& o) const {
    if (p_ != o.p_ || prec_ != o.prec_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return v_ == o.v_ && u_ == o.u_;
}

PadicScalar PadicScalar::shift(long k) const {
    if (zero_) return *this;
    return PadicScalar(p_, prec_, v_ + k, u_);
}

int64_t PadicScalar::residue_mod_p() const { return shifted_residue_mod_p(0); }

int64_t PadicScalar::shifted_residue_mod_p(long k) const {
    if (zero_) return 0;
    const long v = v_ + k;
    if (v > 0) return 0;
    if (v < 0)
        throw ValidationError("NotIntegral", "residue of a non-integral p-adic value");
    return mpz_class(u_ % p_).get_si();
}

std::string PadicScalar::to_string() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << u_;
    if (v_ != 0) os << "*" << p_ << "^" << v_;
    return os.str();
}

}  // namespace ggpint
