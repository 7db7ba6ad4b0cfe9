#include <vector>

#include "ggpint/fp.hpp"
#include "ggpint/oracle.hpp"

namespace ggpint {

int hilbert_symbol_bruteforce(const PadicScalar& a, const PadicScalar& b) {
    if (a.is_zero() || b.is_zero()) throw zero_argument("Hilbert symbol of 0");
    if (a.p() != b.p()) throw InternalError("PrecisionMismatch", "operands over different p");
    const int64_t p = a.p();
    if (p > 31)
        throw ValidationError("SearchTooLarge", "brute-force symbol limited to small p");

    // Square-class representatives: p^{v mod 2} * (unit mod p).
    auto repr = [&](const PadicScalar& s) {
        const int64_t u = mpz_class(s.unit() % p).get_si();
        return (((s.valuation() % 2) + 2) % 2 == 1) ? p * u : u;
    };
    const int64_t A = repr(a), B = repr(b);
    const int64_t p3 = p * p * p;

    std::vector<bool> is_square(size_t(p3), false);
    for (int64_t z = 0; z < p3; ++z) is_square[size_t(z * z % p3)] = true;

    // Primitive solutions with x, y both divisible by p force z = 0 mod p
    // and scale down, so searching x, y not both divisible suffices.
    for (int64_t x = 0; x < p3; ++x) {
        const int64_t ax2 = A * x % p3 * x % p3;
        for (int64_t y = 0; y < p3; ++y) {
            if (x % p == 0 && y % p == 0) continue;
            const int64_t s = (ax2 + B * y % p3 * y) % p3;
            if (is_square[size_t(s)]) return 1;
        }
    }
    return -1;
}

}  // namespace ggpint
