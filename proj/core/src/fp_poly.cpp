#include "ggpint/fp_poly.hpp"

#include <algorithm>
#include <sstream>

namespace ggpint {

FpPoly::FpPoly(int64_t p, std::vector<int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    require_odd_prime(p);
    for (auto& c : c_) c = fp_norm(c, p_);
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int64_t FpPoly::eval(int64_t x) const {
    x = fp_norm(x, p_);
    int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return acc;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = fp_add(coeff(int(i)), o.coeff(int(i)), p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = fp_sub(coeff(int(i)), o.coeff(int(i)), p_);
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(int64_t s) const {
    std::vector<int64_t> r(c_);
    s = fp_norm(s, p_);
    for (auto& c : r) c = c * s % p_;
    return FpPoly(p_, std::move(r));
}

bool FpPoly::operator<(const FpPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return c_ < o.c_;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
    if (d.is_zero()) throw ValidationError("DivisionByZeroPoly", "polynomial division by zero");
    if (degree() < d.degree()) return {zero(p_), *this};
    std::vector<int64_t> rem(c_);
    std::vector<int64_t> quot(degree() - d.degree() + 1, 0);
    int64_t lead_inv = fp_inv(d.leading(), p_);
    for (int k = degree() - d.degree(); k >= 0; --k) {
        int64_t q = rem[k + d.degree()] * lead_inv % p_;
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= d.degree(); ++j)
            rem[k + j] = fp_sub(rem[k + j], q * d.coeff(j) % p_, p_);
    }
    return {FpPoly(p_, std::move(quot)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return *this * fp_inv(leading(), p_);
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1) return zero(p_);
    std::vector<int64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * (int64_t(i) % p_) % p_;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::pow(int64_t e) const {
    FpPoly r = one(p_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        int64_t c = coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

FpPoly powmod_ui(const FpPoly& base, uint64_t e, const FpPoly& m) {
    FpPoly r = FpPoly::one(base.p());
    FpPoly b = base % m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

FpPoly frobenius_powmod(const FpPoly& base, int64_t p, int k, const FpPoly& m) {
    FpPoly r = base % m;
    for (int i = 0; i < k; ++i) r = powmod_ui(r, uint64_t(p), m);
    return r;
}

FpPoly poly_reciprocal(const FpPoly& r) {
    if (!r.is_monic()) throw non_monic_input("reciprocal requires a monic polynomial");
    if (r.constant_term() == 0)
        throw zero_constant_term("reciprocal of a polynomial with R(0) = 0 is not monic-normalizable");
    std::vector<int64_t> rev(r.coeffs().rbegin(), r.coeffs().rend());
    return FpPoly(r.p(), std::move(rev)).monic();
}

bool is_self_reciprocal(const FpPoly& r) { return poly_reciprocal(r) == r; }

bool is_irreducible(const FpPoly& f) {
    // Rabin's test: x^{p^n} = x mod f, and x^{p^{n/q}} - x coprime to f
    // for every prime q | n.
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const int64_t p = f.p();
    const FpPoly fm = f.monic();
    const FpPoly x = FpPoly::var(p);
    std::vector<int> prime_divs;
    int nn = n;
    for (int q = 2; q * q <= nn; ++q)
        if (nn % q == 0) {
            prime_divs.push_back(q);
            while (nn % q == 0) nn /= q;
        }
    if (nn > 1) prime_divs.push_back(nn);
    for (int q : prime_divs) {
        FpPoly h = frobenius_powmod(x, p, n / q, fm) - x;
        if (gcd(h, fm).degree() > 0) return false;
    }
    FpPoly h = frobenius_powmod(x, p, n, fm) - x;
    return (h % fm).is_zero();
}

FpPoly random_monic(int64_t p, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> dist(0, p - 1);
    std::vector<int64_t> c(size_t(degree) + 1);
    for (int i = 0; i < degree; ++i) c[size_t(i)] = dist(rng);
    c[size_t(degree)] = 1;
    return FpPoly(p, std::move(c));
}

FpPoly random_irreducible(int64_t p, int degree, std::mt19937_64& rng) {
    if (degree < 1) throw shape_infeasible("irreducible polynomials have degree >= 1");
    for (int tries = 0; tries < 4096; ++tries) {
        FpPoly f = random_monic(p, degree, rng);
        if (is_irreducible(f)) return f;
    }
    throw InternalError("IrreducibleSearch", "no irreducible found within the sampling budget");
}

}  // namespace ggpint
