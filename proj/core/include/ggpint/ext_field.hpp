#ifndef GGPINT_EXT_FIELD_HPP
#define GGPINT_EXT_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ggpint/fp_factor.hpp"
#include "ggpint/fp_poly.hpp"

namespace ggpint {

/// An element of F_{p^m}: residue modulo the field's defining polynomial,
/// stored as m coefficients low-to-high (always exactly m, zero-padded).
using ExtElem = std::vector<int64_t>;

/// The field F_{p^m} presented as F_p[T]/(modulus), modulus monic
/// irreducible of degree m. m = 1 gives the prime field itself.
class ExtField {
public:
    ExtField(int64_t p, int m, FpPoly modulus);
    /// Builds F_{p^m} from a deterministically found irreducible modulus.
    static ExtField make(int64_t p, int m);

    int64_t p() const { return p_; }
    int m() const { return m_; }
    const FpPoly& modulus() const { return mod_; }
    /// Field size p^m as a double-checked small integer; throws if it
    /// exceeds the enumeration budget (used by exhaustive searches).
    uint64_t size() const;

    ExtElem zero() const { return ExtElem(m_, 0); }
    ExtElem one() const;
    ExtElem from_base(int64_t a) const;
    /// The residue class of T (a generator of the field over F_p whenever
    /// the modulus is primitive; here just a convenient element).
    ExtElem gen() const;

    bool is_zero(const ExtElem& a) const;
    bool eq(const ExtElem& a, const ExtElem& b) const { return a == b; }

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem mul_base(const ExtElem& a, int64_t s) const;
    ExtElem inv(const ExtElem& a) const;
    ExtElem pow(const ExtElem& a, uint64_t e) const;
    /// The Frobenius x -> x^p.
    ExtElem frobenius(const ExtElem& a) const;

    /// Evaluate a polynomial with F_p coefficients at a field element.
    ExtElem eval_poly(const FpPoly& f, const ExtElem& x) const;

    /// Element with ordinal k in the lexicographic enumeration of
    /// coefficient vectors; k < p^m.
    ExtElem element_at(uint64_t k) const;

    std::string to_string(const ExtElem& a) const;

private:
    int64_t p_;
    int m_;
    FpPoly mod_;
};

/// All roots of P lying in F, each repeated according to its multiplicity
/// in P. Found by exhaustive evaluation, multiplicities by synthetic
/// deflation; intended for small fields (the oracle regime).
std::vector<ExtElem> ext_roots(const FpPoly& P, const ExtField& F);

}  // namespace ggpint

#endif
