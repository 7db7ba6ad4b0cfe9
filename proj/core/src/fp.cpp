#include "ggpint/fp.hpp"

namespace ggpint {

int64_t fp_pow(int64_t a, int64_t e, int64_t p) {
    a = fp_norm(a, p);
    int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

int64_t fp_inv(int64_t a, int64_t p) {
    a = fp_norm(a, p);
    if (a == 0) throw zero_argument("inverse of 0 mod p");
    // extended Euclid
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return fp_norm(t, p);
}

int64_t fp_nonsquare(int64_t p) {
    for (int64_t a = 2; a < p; ++a)
        if (fp_legendre(a, p) == -1) return a;
    throw InternalError("NoNonSquare", "no non-square unit found; p is not an odd prime");
}

bool is_odd_prime(int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_odd_prime(int64_t p) {
    if (!is_odd_prime(p))
        throw ValidationError("NotOddPrime", "p must be an odd prime >= 3, got " + std::to_string(p));
}

}  // namespace ggpint
