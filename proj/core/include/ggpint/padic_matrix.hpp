#ifndef GGPINT_PADIC_MATRIX_HPP
#define GGPINT_PADIC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ggpint/padic.hpp"

namespace ggpint {

/// Dense matrix of PadicScalar sharing one (p, N).
class PadicMatrix {
public:
    PadicMatrix() : p_(3), prec_(1), rows_(0), cols_(0) {}
    PadicMatrix(int64_t p, int prec, size_t rows, size_t cols);

    static PadicMatrix identity(int64_t p, int prec, size_t n);

    int64_t p() const { return p_; }
    int precision() const { return prec_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const PadicScalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, PadicScalar v);

    PadicMatrix operator+(const PadicMatrix& o) const;
    PadicMatrix operator-(const PadicMatrix& o) const;
    PadicMatrix operator*(const PadicMatrix& o) const;
    bool operator==(const PadicMatrix& o) const;
    bool operator!=(const PadicMatrix& o) const { return !(*this == o); }

    PadicMatrix transpose() const;
    bool is_symmetric() const;

    std::vector<PadicScalar> apply(const std::vector<PadicScalar>& v) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);

private:
    int64_t p_;
    int prec_;
    size_t rows_, cols_;
    std::vector<PadicScalar> a_;
};

/// Cartan/Smith data over Z_p at precision N: U * M * V = diag(p^{r_i})
/// with U, V unimodular and r_1 >= r_2 >= ... >= r_n.
struct SmithResult {
    std::vector<long> invariants;
    PadicMatrix U, V;
    PadicMatrix diagonal() const;
};

/// Elementary-operation Smith reduction with minimal-valuation pivoting,
/// ties broken by smallest row then smallest column index. Raises
/// SingularAtPrecision when the remaining block vanishes mod p^N before
/// the diagonal is complete.
SmithResult smith_invariants(const PadicMatrix& m);

/// Inverse via the Smith transforms (M^{-1} = V D^{-1} U).
PadicMatrix padic_inverse(const PadicMatrix& m);

/// Valuation of det(M) = sum of the Smith invariants.
long det_valuation(const PadicMatrix& m);

}  // namespace ggpint

#endif
