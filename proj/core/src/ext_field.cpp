#include "ggpint/ext_field.hpp"

#include <sstream>

namespace ggpint {

ExtField::ExtField(int64_t p, int m, FpPoly modulus) : p_(p), m_(m), mod_(std::move(modulus)) {
    require_odd_prime(p);
    if (m < 1) throw ValidationError("ExtDegree", "extension degree must be >= 1");
    if (mod_.p() != p || mod_.degree() != m || !mod_.is_monic())
        throw ValidationError("ExtModulus", "modulus must be monic of the stated degree over F_p");
    if (!is_irreducible(mod_))
        throw ValidationError("ExtModulus", "modulus must be irreducible over F_p");
}

ExtField ExtField::make(int64_t p, int m) {
    if (m == 1) return ExtField(p, 1, FpPoly::var(p));
    // Deterministic scan: T^m + a T + b, then a fixed-seed random fallback.
    for (int64_t b = 1; b < p; ++b)
        for (int64_t a = 0; a < p; ++a) {
            std::vector<int64_t> c(size_t(m) + 1, 0);
            c[0] = b;
            c[1] = a;
            c[size_t(m)] = 1;
            FpPoly f(p, std::move(c));
            if (is_irreducible(f)) return ExtField(p, m, f);
        }
    std::mt19937_64 rng(0xec7f1e1du);
    return ExtField(p, m, random_irreducible(p, m, rng));
}

uint64_t ExtField::size() const {
    uint64_t s = 1;
    for (int i = 0; i < m_; ++i) {
        if (s > (1ull << 40)) throw InternalError("ExtFieldSize", "field too large to enumerate");
        s *= uint64_t(p_);
    }
    return s;
}

ExtElem ExtField::one() const {
    ExtElem e(size_t(m_), 0);
    e[0] = 1;
    return e;
}

ExtElem ExtField::from_base(int64_t a) const {
    ExtElem e(size_t(m_), 0);
    e[0] = fp_norm(a, p_);
    return e;
}

ExtElem ExtField::gen() const {
    if (m_ == 1) {
        // T reduces to the root of the linear modulus.
        return from_base(fp_neg(mod_.coeff(0), p_));
    }
    ExtElem e(size_t(m_), 0);
    e[1] = 1;
    return e;
}

bool ExtField::is_zero(const ExtElem& a) const {
    for (int64_t c : a)
        if (c != 0) return false;
    return true;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(size_t(m_), 0);
    for (int i = 0; i < m_; ++i) r[size_t(i)] = fp_add(a[size_t(i)], b[size_t(i)], p_);
    return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(size_t(m_), 0);
    for (int i = 0; i < m_; ++i) r[size_t(i)] = fp_sub(a[size_t(i)], b[size_t(i)], p_);
    return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
    ExtElem r(size_t(m_), 0);
    for (int i = 0; i < m_; ++i) r[size_t(i)] = fp_neg(a[size_t(i)], p_);
    return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
    FpPoly prod = FpPoly(p_, std::vector<int64_t>(a)) * FpPoly(p_, std::vector<int64_t>(b));
    FpPoly red = prod % mod_;
    ExtElem r(size_t(m_), 0);
    for (int i = 0; i <= red.degree(); ++i) r[size_t(i)] = red.coeff(i);
    return r;
}

ExtElem ExtField::mul_base(const ExtElem& a, int64_t s) const {
    s = fp_norm(s, p_);
    ExtElem r(size_t(m_), 0);
    for (int i = 0; i < m_; ++i) r[size_t(i)] = a[size_t(i)] * s % p_;
    return r;
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (is_zero(a)) throw zero_argument("inverse of 0 in extension field");
    // Extended Euclid in F_p[T] against the modulus.
    FpPoly r0 = mod_, r1 = FpPoly(p_, std::vector<int64_t>(a));
    FpPoly s0 = FpPoly::zero(p_), s1 = FpPoly::one(p_);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        FpPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd = nonzero constant; scale s0 by its inverse.
    FpPoly invpoly = s0 * fp_inv(r0.coeff(0), p_);
    ExtElem r(size_t(m_), 0);
    for (int i = 0; i <= invpoly.degree(); ++i) r[size_t(i)] = invpoly.coeff(i);
    return r;
}

ExtElem ExtField::pow(const ExtElem& a, uint64_t e) const {
    ExtElem r = one(), b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

ExtElem ExtField::frobenius(const ExtElem& a) const { return pow(a, uint64_t(p_)); }

ExtElem ExtField::eval_poly(const FpPoly& f, const ExtElem& x) const {
    ExtElem acc = zero();
    for (int i = f.degree(); i >= 0; --i) {
        acc = mul(acc, x);
        acc[0] = fp_add(acc[0], f.coeff(i), p_);
    }
    return acc;
}

ExtElem ExtField::element_at(uint64_t k) const {
    ExtElem e(size_t(m_), 0);
    for (int i = 0; i < m_; ++i) {
        e[size_t(i)] = int64_t(k % uint64_t(p_));
        k /= uint64_t(p_);
    }
    return e;
}

std::string ExtField::to_string(const ExtElem& a) const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m_; ++i) os << (i ? "," : "") << a[size_t(i)];
    os << "]";
    return os.str();
}

std::vector<ExtElem> ext_roots(const FpPoly& P, const ExtField& F) {
    if (P.degree() < 1)
        throw ValidationError("ConstantPolynomial", "root finding requires degree >= 1");
    const uint64_t q = F.size();
    std::vector<ExtElem> roots;
    // Coefficients of P lifted into F once; deflation happens per root.
    std::vector<ExtElem> coeffs(size_t(P.degree()) + 1);
    for (int i = 0; i <= P.degree(); ++i) coeffs[size_t(i)] = F.from_base(P.coeff(i));

    auto eval = [&](const std::vector<ExtElem>& cs, const ExtElem& x) {
        ExtElem acc = F.zero();
        for (size_t i = cs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), cs[i]);
        return acc;
    };
    // Synthetic division by (T - x); remainder must be zero.
    auto deflate = [&](std::vector<ExtElem>& cs, const ExtElem& x) {
        std::vector<ExtElem> out(cs.size() - 1, F.zero());
        ExtElem carry = F.zero();
        for (size_t i = cs.size(); i-- > 1;) {
            carry = F.add(cs[i], F.mul(carry, x));
            out[i - 1] = carry;
        }
        cs = std::move(out);
    };

    size_t found = 0;
    for (uint64_t k = 0; k < q && found < size_t(P.degree()); ++k) {
        ExtElem x = F.element_at(k);
        if (!F.is_zero(eval(coeffs, x))) continue;
        // Record with multiplicity by repeated deflation.
        std::vector<ExtElem> work = coeffs;
        while (work.size() > 1) {
            if (!F.is_zero(eval(work, x))) break;
            deflate(work, x);
            roots.push_back(x);
            ++found;
        }
        coeffs = std::move(work);
    }
    return roots;
}

}  // namespace ggpint
