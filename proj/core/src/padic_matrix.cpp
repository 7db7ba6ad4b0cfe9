#include "ggpint/padic_matrix.hpp"

#include <cassert>

namespace ggpint {

PadicMatrix::PadicMatrix(int64_t p, int prec, size_t rows, size_t cols)
    : p_(p), prec_(prec), rows_(rows), cols_(cols), a_(rows * cols, PadicScalar(p, prec)) {}

PadicMatrix PadicMatrix::identity(int64_t p, int prec, size_t n) {
    PadicMatrix m(p, prec, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, PadicScalar::one(p, prec));
    return m;
}

void PadicMatrix::set(size_t i, size_t j, PadicScalar v) {
    if (v.p() != p_ || v.precision() != prec_)
        throw InternalError("PrecisionMismatch", "matrix entry carries different (p, N)");
    a_[i * cols_ + j] = std::move(v);
}

PadicMatrix PadicMatrix::operator+(const PadicMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    PadicMatrix r(p_, prec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

PadicMatrix PadicMatrix::operator-(const PadicMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    PadicMatrix r(p_, prec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

PadicMatrix PadicMatrix::operator*(const PadicMatrix& o) const {
    assert(cols_ == o.rows_);
    PadicMatrix r(p_, prec_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < o.cols_; ++j) {
            PadicScalar acc(p_, prec_);
            for (size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.set(i, j, acc);
        }
    return r;
}

bool PadicMatrix::operator==(const PadicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_ || prec_ != o.prec_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

PadicMatrix PadicMatrix::transpose() const {
    PadicMatrix r(p_, prec_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool PadicMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

std::vector<PadicScalar> PadicMatrix::apply(const std::vector<PadicScalar>& v) const {
    assert(v.size() == cols_);
    std::vector<PadicScalar> r(rows_, PadicScalar(p_, prec_));
    for (size_t i = 0; i < rows_; ++i) {
        PadicScalar acc(p_, prec_);
        for (size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

void PadicMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

void PadicMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap(a_[r * cols_ + i], a_[r * cols_ + j]);
}

PadicMatrix SmithResult::diagonal() const {
    const size_t n = invariants.size();
    PadicMatrix d(U.p(), U.precision(), n, n);
    for (size_t i = 0; i < n; ++i)
        d.set(i, i, PadicScalar::one(U.p(), U.precision()).shift(invariants[i]));
    return d;
}

SmithResult smith_invariants(const PadicMatrix& m) {
    if (m.rows() != m.cols())
        throw ValidationError("MatrixShape", "Smith reduction requires a square matrix");
    const size_t n = m.rows();
    const int64_t p = m.p();
    const int prec = m.precision();

    PadicMatrix a = m;
    PadicMatrix u = PadicMatrix::identity(p, prec, n);
    PadicMatrix v = PadicMatrix::identity(p, prec, n);
    std::vector<long> inv;

    for (size_t k = 0; k < n; ++k) {
        // Minimal-valuation pivot, ties by smallest row then column.
        bool found = false;
        long best = 0;
        size_t bi = k, bj = k;
        for (size_t i = k; i < n; ++i)
            for (size_t j = k; j < n; ++j) {
                const PadicScalar& e = a.at(i, j);
                if (e.is_zero()) continue;
                if (!found || e.valuation() < best) {
                    found = true;
                    best = e.valuation();
                    bi = i;
                    bj = j;
                }
            }
        if (!found)
            throw singular_at_precision(
                "remaining block vanishes mod p^N before the diagonal is complete");
        if (best >= long(prec))
            throw precision_exhausted("pivot valuation reached the working precision");

        a.swap_rows(k, bi);
        u.swap_rows(k, bi);
        a.swap_cols(k, bj);
        v.swap_cols(k, bj);

        // Scale row k so the pivot becomes exactly p^best.
        const PadicScalar pivot = a.at(k, k);
        const PadicScalar scale =
            PadicScalar::one(p, prec).shift(pivot.valuation()) / pivot;  // unit
        for (size_t j = 0; j < n; ++j) {
            a.set(k, j, a.at(k, j) * scale);
            u.set(k, j, u.at(k, j) * scale);
        }
        const PadicScalar d = a.at(k, k);

        for (size_t i = k + 1; i < n; ++i) {
            const PadicScalar& e = a.at(i, k);
            if (e.is_zero()) continue;
            const PadicScalar f = e / d;
            if (!f.is_integral())
                throw InternalError("PivotMinimality", "non-integral elimination multiplier");
            for (size_t j = 0; j < n; ++j) {
                a.set(i, j, a.at(i, j) - f * a.at(k, j));
                u.set(i, j, u.at(i, j) - f * u.at(k, j));
            }
        }
        for (size_t j = k + 1; j < n; ++j) {
            const PadicScalar& e = a.at(k, j);
            if (e.is_zero()) continue;
            const PadicScalar f = e / d;
            if (!f.is_integral())
                throw InternalError("PivotMinimality", "non-integral elimination multiplier");
            for (size_t i = 0; i < n; ++i) {
                a.set(i, j, a.at(i, j) - f * a.at(i, k));
                v.set(i, j, v.at(i, j) - f * v.at(i, k));
            }
        }
        inv.push_back(best);
    }

    // The loop produces non-decreasing valuations; the Cartan convention
    // is non-increasing, so reverse the basis order on both sides.
    PadicMatrix ur(p, prec, n, n), vr(p, prec, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ur.set(i, j, u.at(n - 1 - i, j));
            vr.set(i, j, v.at(i, n - 1 - j));
        }
    std::reverse(inv.begin(), inv.end());
    return SmithResult{std::move(inv), std::move(ur), std::move(vr)};
}

PadicMatrix padic_inverse(const PadicMatrix& m) {
    SmithResult s = smith_invariants(m);
    const size_t n = m.rows();
    // M = U^{-1} D V^{-1}, hence M^{-1} = V D^{-1} U.
    PadicMatrix dinv(m.p(), m.precision(), n, n);
    for (size_t i = 0; i < n; ++i)
        dinv.set(i, i, PadicScalar::one(m.p(), m.precision()).shift(-s.invariants[i]));
    return s.V * dinv * s.U;
}

long det_valuation(const PadicMatrix& m) {
    long t = 0;
    for (long r : smith_invariants(m).invariants) t += r;
    return t;
}

}  // namespace ggpint
