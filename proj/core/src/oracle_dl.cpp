#include <map>

#include "ggpint/oracle.hpp"

namespace ggpint {

namespace {

/// One-dimensional kernel of a square matrix over the extension field.
ExtElem kernel_vector(const ExtField& F, std::vector<std::vector<ExtElem>> a, size_t n,
                      std::vector<ExtElem>& out) {
    // Gaussian elimination; returns via `out` a kernel basis vector.
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t pr = r;
        while (pr < n && F.is_zero(a[pr][c])) ++pr;
        if (pr == n) continue;
        std::swap(a[pr], a[r]);
        const ExtElem inv = F.inv(a[r][c]);
        for (size_t j = c; j < n; ++j) a[r][j] = F.mul(a[r][j], inv);
        for (size_t i = 0; i < n; ++i) {
            if (i == r || F.is_zero(a[i][c])) continue;
            const ExtElem f = a[i][c];
            for (size_t j = c; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != n - 1)
        throw InternalError("EigenspaceDimension",
                            "eigenspace dimension != 1 for an irreducible char poly");
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    size_t freec = 0;
    while (is_pivot[freec]) ++freec;
    out.assign(n, ExtElem());
    for (size_t i = 0; i < n; ++i) out[i] = F.zero();
    out[freec] = F.one();
    for (size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = F.neg(a[i][freec]);
    return out[freec];
}

}  // namespace

int dl_fixed_count(const FpMatrix& gram, const FpMatrix& g0, int field_multiplier) {
    const int64_t p = gram.p();
    if (!g0.is_square() || gram.rows() != g0.rows())
        throw ValidationError("MatrixShape", "gram and g0 must be square of equal size");
    const size_t tprime = g0.rows();
    if (tprime % 2 != 0) throw odd_dimension("fixed-point counting needs even dimension");
    if (tprime > 6)
        throw ValidationError("DimensionTooLarge",
                              "eigenline enumeration is limited to dimension <= 6");
    const size_t dprime = tprime / 2;

    const FpPoly chi = matrix_char_poly(g0);
    if (!is_irreducible(chi))
        throw reducible_char_poly("char poly of g0 must be irreducible");
    if (field_multiplier < 1) field_multiplier = 1;

    const ExtField F = ExtField::make(p, int(tprime) * field_multiplier);
    const auto roots = ext_roots(chi, F);
    if (roots.size() != tprime)
        throw InternalError("SplittingField", "char poly does not split in F_{p^{2d'}}");

    // Eigenvectors.
    std::vector<std::vector<ExtElem>> eig(tprime);
    for (size_t k = 0; k < tprime; ++k) {
        std::vector<std::vector<ExtElem>> a(tprime, std::vector<ExtElem>(tprime));
        for (size_t i = 0; i < tprime; ++i)
            for (size_t j = 0; j < tprime; ++j) {
                a[i][j] = F.from_base(g0.at(i, j));
                if (i == j) a[i][j] = F.sub(a[i][j], roots[k]);
            }
        kernel_vector(F, std::move(a), tprime, eig[k]);
    }

    // Transported pairing; must be supported exactly on inverse pairs.
    auto pair_value = [&](size_t i, size_t j) {
        ExtElem acc = F.zero();
        for (size_t a = 0; a < tprime; ++a)
            for (size_t b = 0; b < tprime; ++b) {
                const int64_t gab = gram.at(a, b);
                if (gab == 0) continue;
                acc = F.add(acc, F.mul_base(F.mul(eig[i][a], eig[j][b]), gab));
            }
        return acc;
    };
    std::vector<int> partner(tprime, -1);
    for (size_t i = 0; i < tprime; ++i)
        for (size_t j = 0; j < tprime; ++j) {
            const bool inverse_pair =
                F.is_zero(F.sub(F.mul(roots[i], roots[j]), F.one()));
            const bool pairs = !F.is_zero(pair_value(i, j));
            if (pairs != inverse_pair)
                throw pairing_degenerate(
                    "eigenline pairing is not anti-diagonal by inverse pairs");
            if (inverse_pair) {
                if (i == j)
                    throw pairing_degenerate("self-paired eigenvalue (lambda^2 = 1)");
                partner[i] = int(j);
            }
        }
    for (size_t i = 0; i < tprime; ++i)
        if (partner[i] < 0) throw pairing_degenerate("eigenvalue without inverse partner");

    // Frobenius permutation of the eigenvalues.
    std::map<ExtElem, size_t> root_index;
    for (size_t i = 0; i < tprime; ++i) root_index[roots[i]] = i;
    std::vector<size_t> frob(tprime);
    for (size_t i = 0; i < tprime; ++i) {
        // The relevant Frobenius is x -> x^p regardless of the ambient
        // field degree (a larger field only re-embeds the same orbit).
        const ExtElem im = F.frobenius(roots[i]);
        auto it = root_index.find(im);
        if (it == root_index.end())
            throw InternalError("FrobeniusOrbit", "Frobenius does not permute the roots");
        frob[i] = it->second;
    }

    // Representatives: one eigenvalue per inverse pair.
    std::vector<size_t> reps;
    std::vector<bool> seen(tprime, false);
    for (size_t i = 0; i < tprime; ++i) {
        if (seen[i]) continue;
        seen[i] = seen[size_t(partner[i])] = true;
        reps.push_back(i);
    }
    if (reps.size() != dprime)
        throw pairing_degenerate("inverse pairs do not partition the eigenvalues");

    // Choose one of {lambda, lambda^{-1}} per pair; count choices S with
    // |S union S^Frobenius| = d' + 1.
    int count = 0;
    for (uint64_t mask = 0; mask < (1ull << dprime); ++mask) {
        std::vector<bool> in_set(tprime, false);
        for (size_t b = 0; b < dprime; ++b) {
            const size_t idx =
                (mask >> b) & 1 ? size_t(partner[reps[b]]) : reps[b];
            in_set[idx] = true;
        }
        std::vector<bool> united = in_set;
        for (size_t i = 0; i < tprime; ++i)
            if (in_set[i]) united[frob[i]] = true;
        size_t card = 0;
        for (bool v : united) card += v;
        if (card == dprime + 1) ++count;
    }
    return count;
}

}  // namespace ggpint
