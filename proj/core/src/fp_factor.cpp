#include "ggpint/fp_factor.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace ggpint {

namespace {

FpPoly powmod_mpz(const FpPoly& base, const mpz_class& e, const FpPoly& m) {
    FpPoly r = FpPoly::one(base.p());
    FpPoly b = base % m;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

/// p-th root of a polynomial in x^p over the prime field (a^{1/p} = a).
FpPoly pth_root(const FpPoly& f) {
    const int64_t p = f.p();
    std::vector<int64_t> c(size_t(f.degree() / p) + 1, 0);
    for (int i = 0; i * p <= f.degree(); ++i) c[size_t(i)] = f.coeff(i * int(p));
    return FpPoly(p, std::move(c));
}

/// Squarefree decomposition: pairwise-coprime squarefree parts with their
/// multiplicities, f = prod part^mult.
void squarefree_decompose(const FpPoly& f, int outer_mult,
                          std::vector<std::pair<FpPoly, int>>& out) {
    const int64_t p = f.p();
    if (f.degree() < 1) return;
    FpPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * int(p), out);
        return;
    }
    FpPoly c = gcd(f, df);
    FpPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() >= 1) out.emplace_back(z.monic(), i * outer_mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(pth_root(c), outer_mult * int(p), out);
}

/// Distinct-degree splitting of a squarefree monic polynomial: returns
/// (product of all irreducible factors of degree d, d) pairs.
std::vector<std::pair<FpPoly, int>> distinct_degree_split(FpPoly f) {
    const int64_t p = f.p();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly h = FpPoly::var(p);  // x^{p^d} mod f, updated incrementally
    int d = 0;
    while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
        ++d;
        h = powmod_ui(h, uint64_t(p), f);
        FpPoly g = gcd(h - FpPoly::var(p), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

/// Cantor--Zassenhaus equal-degree splitting (odd p): f is a squarefree
/// product of irreducibles all of degree d.
void equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const int64_t p = f.p();
    mpz_class exponent;
    mpz_pow_ui(exponent.get_mpz_t(), mpz_class(p).get_mpz_t(), uint64_t(d));
    exponent = (exponent - 1) / 2;
    for (;;) {
        FpPoly a = random_monic(p, int(rng() % uint64_t(f.degree())) + 1, rng) % f;
        if (a.degree() < 1) continue;
        FpPoly g = gcd(a, f);
        if (g.degree() == 0) {
            FpPoly b = powmod_mpz(a, exponent, f);
            g = gcd(b - FpPoly::one(p), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

int FactorList::multiplicity(const FpPoly& f) const {
    for (const auto& [g, m] : factors)
        if (g == f) return m;
    return 0;
}

FpPoly FactorList::product() const {
    FpPoly r = FpPoly::one(p);
    for (const auto& [g, m] : factors) r = r * g.pow(m);
    return r;
}

int FactorList::total_degree() const {
    int t = 0;
    for (const auto& [g, m] : factors) t += g.degree() * m;
    return t;
}

FactorList poly_factorize(const FpPoly& f, uint64_t seed) {
    if (!f.is_monic()) throw non_monic_input("factorization requires a monic polynomial");
    if (f.degree() < 1)
        throw ValidationError("ConstantPolynomial", "factorization requires degree >= 1");
    std::mt19937_64 rng(seed);

    std::vector<std::pair<FpPoly, int>> squarefree;
    squarefree_decompose(f, 1, squarefree);

    FactorList result;
    result.p = f.p();
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [block, d] : distinct_degree_split(part)) {
            std::vector<FpPoly> irreducibles;
            equal_degree_split(block, d, rng, irreducibles);
            for (auto& irr : irreducibles) result.factors.emplace_back(std::move(irr), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (result.product() != f)
        throw InternalError("FactorizationCheck", "factor product does not reproduce the input");
    return result;
}

}  // namespace ggpint
