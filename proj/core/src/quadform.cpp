#include "ggpint/quadform.hpp"

#include "ggpint/fp.hpp"

namespace ggpint {

SquareClass square_class(const PadicScalar& x) {
    if (x.is_zero()) throw zero_argument("square class of 0");
    const int64_t u = mpz_class(x.unit() % x.p()).get_si();
    return SquareClass{int(((x.valuation() % 2) + 2) % 2), fp_legendre(u, x.p()) == 1};
}

int hilbert_symbol(const PadicScalar& a, const PadicScalar& b) {
    if (a.is_zero() || b.is_zero()) throw zero_argument("Hilbert symbol of 0");
    if (a.p() != b.p()) throw InternalError("PrecisionMismatch", "operands over different p");
    const int64_t p = a.p();
    const long alpha = a.valuation(), beta = b.valuation();
    const int64_t ua = mpz_class(a.unit() % p).get_si();
    const int64_t ub = mpz_class(b.unit() % p).get_si();
    int sign = 1;
    if ((alpha * beta) % 2 != 0 && fp_legendre(p - 1, p) == -1) sign = -sign;
    if (beta % 2 != 0 && fp_legendre(ua, p) == -1) sign = -sign;
    if (alpha % 2 != 0 && fp_legendre(ub, p) == -1) sign = -sign;
    return sign;
}

std::vector<PadicScalar> diagonalize_form(const PadicMatrix& gram) {
    if (!gram.is_symmetric()) throw not_symmetric("Gram matrix is not symmetric");
    const size_t n = gram.rows();
    PadicMatrix a = gram;

    std::vector<PadicScalar> diag;
    for (size_t k = 0; k < n; ++k) {
        // Prefer the minimal-valuation diagonal entry; otherwise use an
        // off-diagonal entry to make one (char != 2).
        bool found = false;
        long best = 0;
        size_t bi = k;
        for (size_t i = k; i < n; ++i) {
            const PadicScalar& e = a.at(i, i);
            if (e.is_zero()) continue;
            if (!found || e.valuation() < best) {
                found = true;
                best = e.valuation();
                bi = i;
            }
        }
        if (found) {
            a.swap_rows(k, bi);
            a.swap_cols(k, bi);
        } else {
            bool off = false;
            size_t oi = k, oj = k;
            long obest = 0;
            for (size_t i = k; i < n && !off; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    const PadicScalar& e = a.at(i, j);
                    if (e.is_zero()) continue;
                    if (!off || e.valuation() < obest) {
                        off = true;
                        obest = e.valuation();
                        oi = i;
                        oj = j;
                    }
                }
            if (!off)
                throw singular_at_precision(
                    "form degenerates mod p^N during diagonalization");
            // e_{oi} <- e_{oi} + e_{oj}: q(e_oi) becomes 2*B(e_oi,e_oj) != 0.
            for (size_t c = 0; c < n; ++c) a.set(oi, c, a.at(oi, c) + a.at(oj, c));
            for (size_t r = 0; r < n; ++r) a.set(r, oi, a.at(r, oi) + a.at(r, oj));
            a.swap_rows(k, oi);
            a.swap_cols(k, oi);
        }

        const PadicScalar d = a.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            const PadicScalar& e = a.at(i, k);
            if (e.is_zero()) continue;
            const PadicScalar f = e / d;
            for (size_t c = 0; c < n; ++c) a.set(i, c, a.at(i, c) - f * a.at(k, c));
            for (size_t r = 0; r < n; ++r) a.set(r, i, a.at(r, i) - f * a.at(r, k));
        }
        diag.push_back(d);
    }
    return diag;
}

int hasse_invariant(const PadicMatrix& gram) {
    const auto d = diagonalize_form(gram);
    int h = 1;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) h *= hilbert_symbol(d[i], d[j]);
    return h;
}

SquareClass det_square_class(const PadicMatrix& gram) {
    const auto d = diagonalize_form(gram);
    PadicScalar prod = PadicScalar::one(gram.p(), gram.precision());
    for (const auto& x : d) prod = prod * x;
    return square_class(prod);
}

}  // namespace ggpint
