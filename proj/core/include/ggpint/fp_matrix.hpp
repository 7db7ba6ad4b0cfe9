#ifndef GGPINT_FP_MATRIX_HPP
#define GGPINT_FP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "ggpint/fp_poly.hpp"

namespace ggpint {

/// Dense matrix over F_p, row-major, entries canonical residues.
class FpMatrix {
public:
    FpMatrix() : p_(3), rows_(0), cols_(0) {}
    FpMatrix(int64_t p, size_t rows, size_t cols);
    FpMatrix(int64_t p, size_t rows, size_t cols, std::vector<int64_t> entries);

    static FpMatrix identity(int64_t p, size_t n);
    /// Companion matrix of a monic polynomial: C e_i = e_{i+1}, last column
    /// holds the negated low coefficients.
    static FpMatrix companion(const FpPoly& f);
    static FpMatrix random(int64_t p, size_t rows, size_t cols, std::mt19937_64& rng);
    static FpMatrix random_invertible(int64_t p, size_t n, std::mt19937_64& rng);

    int64_t p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    int64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, int64_t v) { a_[i * cols_ + j] = fp_norm(v, p_); }

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator*(int64_t s) const;
    bool operator==(const FpMatrix& o) const;
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    FpMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    std::vector<int64_t> apply(const std::vector<int64_t>& v) const;
    FpMatrix pow(uint64_t e) const;

    size_t rank() const;
    int64_t det() const;
    /// Inverse; nullopt if singular.
    std::optional<FpMatrix> inverse() const;
    /// Basis of the right kernel, one column vector per basis element.
    std::vector<std::vector<int64_t>> nullspace() const;
    /// One solution x of Ax = b, or nullopt if inconsistent.
    std::optional<std::vector<int64_t>> solve(const std::vector<int64_t>& b) const;
    /// Solves A X = B column by column; nullopt if any column is inconsistent.
    std::optional<FpMatrix> solve_matrix(const FpMatrix& b) const;

    /// Columns spanning the column space (a basis of the image).
    std::vector<std::vector<int64_t>> column_space_basis() const;

private:
    int64_t p_;
    size_t rows_, cols_;
    std::vector<int64_t> a_;
};

/// Characteristic polynomial via Hessenberg reduction (monic, degree n).
FpPoly matrix_char_poly(const FpMatrix& m);
/// Minimal polynomial as the lcm of the Krylov relations of the standard
/// basis vectors; always divides the characteristic polynomial.
FpPoly matrix_min_poly(const FpMatrix& m);

/// Evaluate a polynomial at a matrix argument (Horner).
FpMatrix poly_at_matrix(const FpPoly& f, const FpMatrix& m);

}  // namespace ggpint

#endif
