#ifndef GGPINT_QUADFORM_HPP
#define GGPINT_QUADFORM_HPP

#include "ggpint/padic_matrix.hpp"

namespace ggpint {

/// Square class of a nonzero element of Q_p^x / (Q_p^x)^2, odd p: the
/// valuation parity and whether the unit part is a quadratic residue.
struct SquareClass {
    int v_parity = 0;       // 0 or 1
    bool unit_square = true;

    bool operator==(const SquareClass& o) const {
        return v_parity == o.v_parity && unit_square == o.unit_square;
    }
};

SquareClass square_class(const PadicScalar& x);

/// Hilbert symbol (a, b)_p for odd p by the tame formula
///   (a,b) = (-1|p)^{ab-valuations} * (u_a|p)^{v(b)} * (u_b|p)^{v(a)}.
int hilbert_symbol(const PadicScalar& a, const PadicScalar& b);

/// Diagonalization of a symmetric nondegenerate Gram matrix by congruence
/// (symmetric elimination); returns the diagonal entries.
std::vector<PadicScalar> diagonalize_form(const PadicMatrix& gram);

/// Hasse invariant prod_{i<j} (d_i, d_j) of the diagonalized form.
int hasse_invariant(const PadicMatrix& gram);

/// Square class of det(gram).
SquareClass det_square_class(const PadicMatrix& gram);

}  // namespace ggpint

#endif
