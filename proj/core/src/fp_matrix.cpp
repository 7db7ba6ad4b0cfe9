#include "ggpint/fp_matrix.hpp"

#include <algorithm>
#include <cassert>

namespace ggpint {

FpMatrix::FpMatrix(int64_t p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    require_odd_prime(p);
}

FpMatrix::FpMatrix(int64_t p, size_t rows, size_t cols, std::vector<int64_t> entries)
    : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
    require_odd_prime(p);
    if (a_.size() != rows * cols)
        throw ValidationError("MatrixShape", "entry count does not match matrix shape");
    for (auto& x : a_) x = fp_norm(x, p_);
}

FpMatrix FpMatrix::identity(int64_t p, size_t n) {
    FpMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::companion(const FpPoly& f) {
    if (!f.is_monic()) throw non_monic_input("companion matrix requires a monic polynomial");
    const size_t n = size_t(f.degree());
    if (n == 0) throw ValidationError("MatrixShape", "companion of a constant polynomial");
    FpMatrix m(f.p(), n, n);
    for (size_t i = 0; i + 1 < n; ++i) m.set(i + 1, i, 1);
    for (size_t i = 0; i < n; ++i) m.set(i, n - 1, fp_neg(f.coeff(int(i)), f.p()));
    return m;
}

FpMatrix FpMatrix::random(int64_t p, size_t rows, size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> dist(0, p - 1);
    FpMatrix m(p, rows, cols);
    for (size_t i = 0; i < rows * cols; ++i) m.a_[i] = dist(rng);
    return m;
}

FpMatrix FpMatrix::random_invertible(int64_t p, size_t n, std::mt19937_64& rng) {
    for (;;) {
        FpMatrix m = random(p, n, n, rng);
        if (m.rank() == n) return m;
    }
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    FpMatrix r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_add(a_[i], o.a_[i], p_);
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    FpMatrix r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp_sub(a_[i], o.a_[i], p_);
    return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    assert(cols_ == o.rows_ && p_ == o.p_);
    FpMatrix r(p_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const int64_t aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.a_[i * o.cols_ + j] = (r.a_[i * o.cols_ + j] + aik * o.at(k, j)) % p_;
        }
    return r;
}

FpMatrix FpMatrix::operator*(int64_t s) const {
    s = fp_norm(s, p_);
    FpMatrix r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s % p_;
    return r;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(p_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool FpMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool FpMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int64_t x) { return x == 0; });
}

std::vector<int64_t> FpMatrix::apply(const std::vector<int64_t>& v) const {
    assert(v.size() == cols_);
    std::vector<int64_t> r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        int64_t acc = 0;
        for (size_t j = 0; j < cols_; ++j) acc = (acc + at(i, j) * fp_norm(v[j], p_)) % p_;
        r[i] = acc;
    }
    return r;
}

FpMatrix FpMatrix::pow(uint64_t e) const {
    assert(is_square());
    FpMatrix r = identity(p_, rows_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns. When `reduced`,
// back-eliminates to RREF with unit pivots.
std::vector<size_t> echelonize(std::vector<int64_t>& a, size_t rows, size_t cols, int64_t p,
                               bool reduced) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[r * cols + j]);
        const int64_t inv = fp_inv(a[r * cols + c], p);
        for (size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * inv % p;
        for (size_t i = reduced ? 0 : r + 1; i < rows; ++i) {
            if (i == r) continue;
            const int64_t f = a[i * cols + c];
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j)
                a[i * cols + j] = fp_sub(a[i * cols + j], f * a[r * cols + j] % p, p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t FpMatrix::rank() const {
    std::vector<int64_t> a(a_);
    return echelonize(a, rows_, cols_, p_, false).size();
}

int64_t FpMatrix::det() const {
    assert(is_square());
    std::vector<int64_t> a(a_);
    int64_t d = 1;
    for (size_t c = 0; c < cols_; ++c) {
        size_t pr = c;
        while (pr < rows_ && a[pr * cols_ + c] == 0) ++pr;
        if (pr == rows_) return 0;
        if (pr != c) {
            for (size_t j = 0; j < cols_; ++j) std::swap(a[pr * cols_ + j], a[c * cols_ + j]);
            d = fp_neg(d, p_);
        }
        d = d * a[c * cols_ + c] % p_;
        const int64_t inv = fp_inv(a[c * cols_ + c], p_);
        for (size_t i = c + 1; i < rows_; ++i) {
            const int64_t f = a[i * cols_ + c] * inv % p_;
            if (f == 0) continue;
            for (size_t j = c; j < cols_; ++j)
                a[i * cols_ + j] = fp_sub(a[i * cols_ + j], f * a[c * cols_ + j] % p_, p_);
        }
    }
    return d;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    assert(is_square());
    const size_t n = rows_;
    std::vector<int64_t> aug(n * 2 * n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = at(i, j);
        aug[i * 2 * n + n + i] = 1;
    }
    auto pivots = echelonize(aug, n, 2 * n, p_, true);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    FpMatrix r(p_, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.set(i, j, aug[i * 2 * n + n + j]);
    return r;
}

std::vector<std::vector<int64_t>> FpMatrix::nullspace() const {
    std::vector<int64_t> a(a_);
    auto pivots = echelonize(a, rows_, cols_, p_, true);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<int64_t>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<int64_t> v(cols_, 0);
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp_neg(a[r * cols_ + freec], p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<int64_t>> FpMatrix::solve(const std::vector<int64_t>& b) const {
    assert(b.size() == rows_);
    const size_t w = cols_ + 1;
    std::vector<int64_t> aug(rows_ * w, 0);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug[i * w + j] = at(i, j);
        aug[i * w + cols_] = fp_norm(b[i], p_);
    }
    auto pivots = echelonize(aug, rows_, w, p_, true);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<int64_t> x(cols_, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r * w + cols_];
    return x;
}

std::optional<FpMatrix> FpMatrix::solve_matrix(const FpMatrix& b) const {
    assert(b.rows() == rows_);
    FpMatrix x(p_, cols_, b.cols());
    for (size_t j = 0; j < b.cols(); ++j) {
        std::vector<int64_t> col(rows_);
        for (size_t i = 0; i < rows_; ++i) col[i] = b.at(i, j);
        auto sol = solve(col);
        if (!sol) return std::nullopt;
        for (size_t i = 0; i < cols_; ++i) x.set(i, j, (*sol)[i]);
    }
    return x;
}

std::vector<std::vector<int64_t>> FpMatrix::column_space_basis() const {
    std::vector<int64_t> a(a_);
    auto pivots = echelonize(a, rows_, cols_, p_, false);
    std::vector<std::vector<int64_t>> basis;
    for (size_t c : pivots) {
        std::vector<int64_t> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

FpPoly matrix_char_poly(const FpMatrix& m) {
    assert(m.is_square());
    const int64_t p = m.p();
    const size_t n = m.rows();
    if (n == 0) return FpPoly::one(p);

    // Similarity reduction to upper Hessenberg form.
    std::vector<int64_t> h(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h[i * n + j] = m.at(i, j);
    auto H = [&](size_t i, size_t j) -> int64_t& { return h[i * n + j]; };
    for (size_t k = 0; k + 2 < n; ++k) {
        size_t pivot = k + 1;
        while (pivot < n && H(pivot, k) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != k + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(H(pivot, j), H(k + 1, j));
            for (size_t i = 0; i < n; ++i) std::swap(H(i, pivot), H(i, k + 1));
        }
        const int64_t inv = fp_inv(H(k + 1, k), p);
        for (size_t r = k + 2; r < n; ++r) {
            const int64_t f = H(r, k) * inv % p;
            if (f == 0) continue;
            for (size_t j = 0; j < n; ++j) H(r, j) = fp_sub(H(r, j), f * H(k + 1, j) % p, p);
            for (size_t i = 0; i < n; ++i) H(i, k + 1) = (H(i, k + 1) + f * H(i, r)) % p;
        }
    }

    // Determinant expansion along the last column of each leading block.
    std::vector<FpPoly> cp(n + 1, FpPoly::one(p));
    const FpPoly x = FpPoly::var(p);
    for (size_t mdim = 1; mdim <= n; ++mdim) {
        FpPoly q = (x - FpPoly::constant(p, H(mdim - 1, mdim - 1))) * cp[mdim - 1];
        int64_t subdiag = 1;
        for (size_t i = 1; i < mdim; ++i) {
            subdiag = subdiag * H(mdim - i, mdim - i - 1) % p;
            const int64_t coef = subdiag * H(mdim - 1 - i, mdim - 1) % p;
            if (coef != 0) q = q - cp[mdim - 1 - i] * coef;
        }
        cp[mdim] = q;
    }
    return cp[n];
}

FpPoly matrix_min_poly(const FpMatrix& m) {
    assert(m.is_square());
    const int64_t p = m.p();
    const size_t n = m.rows();
    FpPoly result = FpPoly::one(p);
    for (size_t start = 0; start < n && size_t(result.degree()) < n; ++start) {
        // Krylov chain of e_start: find the first linear relation.
        std::vector<std::vector<int64_t>> chain;  // v, Mv, M^2 v, ...
        std::vector<int64_t> v(n, 0);
        v[start] = 1;
        // Row-reduced snapshots with bookkeeping of the combination used.
        std::vector<std::vector<int64_t>> rows, combos;
        FpPoly local = FpPoly::zero(p);
        for (size_t step = 0; step <= n; ++step) {
            std::vector<int64_t> w = v, combo(n + 1, 0);
            combo[step] = 1;
            for (size_t r = 0; r < rows.size(); ++r) {
                size_t lead = 0;
                while (lead < n && rows[r][lead] == 0) ++lead;
                if (lead == n || w[lead] == 0) continue;
                const int64_t f = w[lead] * fp_inv(rows[r][lead], p) % p;
                for (size_t j = 0; j < n; ++j) w[j] = fp_sub(w[j], f * rows[r][j] % p, p);
                for (size_t j = 0; j <= n; ++j)
                    combo[j] = fp_sub(combo[j], f * combos[r][j] % p, p);
            }
            if (std::all_of(w.begin(), w.end(), [](int64_t x) { return x == 0; })) {
                local = FpPoly(p, std::vector<int64_t>(combo.begin(), combo.begin() + long(step) + 1))
                            .monic();
                break;
            }
            rows.push_back(w);
            combos.push_back(combo);
            chain.push_back(v);
            v = m.apply(v);
        }
        // lcm(result, local)
        result = (result * (local / gcd(result, local))).monic();
    }
    return result;
}

FpMatrix poly_at_matrix(const FpPoly& f, const FpMatrix& m) {
    assert(m.is_square());
    FpMatrix acc(m.p(), m.rows(), m.rows());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        const int64_t c = f.coeff(i);
        if (c != 0)
            for (size_t k = 0; k < m.rows(); ++k) acc.set(k, k, fp_add(acc.at(k, k), c, m.p()));
    }
    return acc;
}

}  // namespace ggpint
