#include <gmpxx.h>

#include <algorithm>
#include <set>

#include "ggpint/instance.hpp"

namespace ggpint {

namespace {

// ---- factor sampling -------------------------------------------------------

/// T^e * sigma(T + 1/T): self-reciprocal of degree 2e, irreducible for
/// roughly half of the irreducible sigma.
FpPoly reciprocal_transform(const FpPoly& sigma) {
    const int64_t p = sigma.p();
    const int e = sigma.degree();
    const FpPoly tsq1 = FpPoly::of(p, {1, 0, 1});  // T^2 + 1
    FpPoly acc = FpPoly::zero(p);
    for (int k = 0; k <= e; ++k) {
        const int64_t a = sigma.coeff(k);
        if (a == 0) continue;
        // a * T^{e-k} * (T^2+1)^k
        std::vector<int64_t> shift(size_t(e - k) + 1, 0);
        shift.back() = a;
        acc = acc + FpPoly(p, shift) * tsq1.pow(k);
    }
    return acc;
}

FpPoly sample_self_reciprocal_irreducible(int64_t p, int degree, std::mt19937_64& rng) {
    if (degree == 1) return rng() % 2 ? FpPoly::of(p, {p - 1, 1}) : FpPoly::of(p, {1, 1});
    if (degree % 2 != 0)
        throw shape_infeasible("self-reciprocal irreducibles of odd degree > 1 do not exist");
    for (int tries = 0; tries < 4096; ++tries) {
        FpPoly sigma = random_irreducible(p, degree / 2, rng);
        FpPoly q = reciprocal_transform(sigma);
        if (is_irreducible(q)) return q;
    }
    throw shape_infeasible("no self-reciprocal irreducible found within the sampling budget");
}

FpPoly sample_non_self_reciprocal_irreducible(int64_t p, int degree, std::mt19937_64& rng) {
    for (int tries = 0; tries < 4096; ++tries) {
        FpPoly r = random_irreducible(p, degree, rng);
        if (r.constant_term() == 0) continue;
        if (!is_self_reciprocal(r)) return r;
    }
    throw shape_infeasible("no non-self-reciprocal irreducible of degree " +
                           std::to_string(degree) + " over F_" + std::to_string(p));
}

struct SampledShape {
    FpPoly P;
    std::vector<std::pair<FpPoly, int>> factors;  // (irreducible, multiplicity)
};

SampledShape sample_factors(int64_t p, const std::vector<FactorShape>& shape,
                            std::mt19937_64& rng) {
    int q_count = 0;
    int total_degree = 0;
    for (const auto& s : shape) {
        if (s.degree < 1 || s.multiplicity < 1)
            throw shape_infeasible("factor shapes need degree >= 1 and multiplicity >= 1");
        switch (s.kind) {
            case FactorShape::Kind::SelfReciprocal:
                ++q_count;
                if (s.multiplicity % 2 == 0)
                    throw shape_infeasible("the distinguished factor needs odd multiplicity");
                total_degree += s.degree * s.multiplicity;
                break;
            case FactorShape::Kind::Pair:
                total_degree += 2 * s.degree * s.multiplicity;
                break;
            case FactorShape::Kind::EvenSelfReciprocal:
                if (s.multiplicity % 2 != 0)
                    throw shape_infeasible("even self-reciprocal factors need even multiplicity");
                total_degree += s.degree * s.multiplicity;
                break;
        }
    }
    if (q_count != 1)
        throw shape_infeasible("exactly one self-reciprocal factor of odd multiplicity required");
    if (total_degree % 2 != 0)
        throw shape_infeasible("total degree t would be odd");

    for (int attempt = 0; attempt < 256; ++attempt) {
        std::set<FpPoly> used;
        std::vector<std::pair<FpPoly, int>> factors;
        bool collision = false;
        for (const auto& s : shape) {
            if (s.kind == FactorShape::Kind::Pair) {
                FpPoly r = sample_non_self_reciprocal_irreducible(p, s.degree, rng);
                FpPoly rstar = poly_reciprocal(r);
                if (!used.insert(r).second || !used.insert(rstar).second) {
                    collision = true;
                    break;
                }
                factors.emplace_back(r, s.multiplicity);
                factors.emplace_back(rstar, s.multiplicity);
            } else {
                FpPoly q = sample_self_reciprocal_irreducible(p, s.degree, rng);
                if (!used.insert(q).second) {
                    collision = true;
                    break;
                }
                factors.emplace_back(q, s.multiplicity);
            }
        }
        if (collision) continue;
        FpPoly prod = FpPoly::one(p);
        for (const auto& [f, m] : factors) prod = prod * f.pow(m);
        return SampledShape{prod, std::move(factors)};
    }
    throw shape_infeasible("could not realize the shape with pairwise distinct factors");
}

// ---- invariant forms over F_p ----------------------------------------------

/// Basis of the space of symmetric G with C^T G C = G over F_p.
std::vector<std::vector<int64_t>> invariant_form_space(const FpMatrix& c) {
    const int64_t p = c.p();
    const size_t t = c.rows();
    const size_t nu = t * (t + 1) / 2;  // unknowns s_{ij}, i <= j
    auto idx = [&](size_t i, size_t j) {  // i <= j
        return i * t - i * (i - 1) / 2 + (j - i);
    };
    FpMatrix sys(p, nu, nu);
    size_t row = 0;
    for (size_t i = 0; i < t; ++i)
        for (size_t j = i; j < t; ++j, ++row) {
            // (C^T G C)_{ij} - G_{ij} = 0
            for (size_t k = 0; k < t; ++k)
                for (size_t l = 0; l < t; ++l) {
                    const int64_t coef = fp_mul(c.at(k, i), c.at(l, j), p);
                    if (coef == 0) continue;
                    const size_t col = k <= l ? idx(k, l) : idx(l, k);
                    sys.set(row, col, fp_add(sys.at(row, col), coef, p));
                }
            sys.set(row, idx(i, j), fp_sub(sys.at(row, idx(i, j)), 1, p));
        }
    return sys.nullspace();
}

FpMatrix unpack_symmetric(int64_t p, size_t t, const std::vector<int64_t>& packed) {
    FpMatrix g(p, t, t);
    size_t k = 0;
    for (size_t i = 0; i < t; ++i)
        for (size_t j = i; j < t; ++j, ++k) {
            g.set(i, j, packed[k]);
            g.set(j, i, packed[k]);
        }
    return g;
}

// ---- exact rational linear algebra (for the full-instance generator) -------

using QVec = std::vector<mpq_class>;

std::vector<QVec> rational_nullspace(std::vector<QVec> a, size_t cols) {
    const size_t rows = a.size();
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        const mpq_class inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        QVec v(cols, 0);
        v[freec] = 1;
        for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int64_t> integerize(const QVec& v) {
    mpz_class l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<int64_t> out;
    mpz_class g = 0;
    std::vector<mpz_class> scaled;
    for (const auto& q : v) {
        mpz_class s = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
        scaled.push_back(s);
    }
    if (g == 0) g = 1;
    for (auto& s : scaled) {
        s /= g;
        if (!s.fits_slong_p())
            throw InternalError("IntegerOverflow", "invariant-form basis entry too large");
        out.push_back(s.get_si());
    }
    return out;
}

/// Integer basis of the symmetric solutions of C^T S C = S for an integer
/// companion-like matrix C (given as int64 entries).
std::vector<std::vector<int64_t>> invariant_form_space_z(const std::vector<int64_t>& c,
                                                         size_t t) {
    const size_t nu = t * (t + 1) / 2;
    auto idx = [&](size_t i, size_t j) { return i * t - i * (i - 1) / 2 + (j - i); };
    auto cat = [&](size_t i, size_t j) { return c[i * t + j]; };
    std::vector<QVec> sys;
    for (size_t i = 0; i < t; ++i)
        for (size_t j = i; j < t; ++j) {
            QVec row(nu, 0);
            for (size_t k = 0; k < t; ++k)
                for (size_t l = 0; l < t; ++l) {
                    const mpq_class coef = mpz_class(cat(k, i)) * mpz_class(cat(l, j));
                    if (coef == 0) continue;
                    const size_t col = k <= l ? idx(k, l) : idx(l, k);
                    row[col] += coef;
                }
            row[idx(i, j)] -= 1;
            sys.push_back(std::move(row));
        }
    std::vector<std::vector<int64_t>> basis;
    for (const auto& v : rational_nullspace(std::move(sys), nu)) basis.push_back(integerize(v));
    return basis;
}

std::vector<int64_t> centered_lift(const FpPoly& f) {
    const int64_t p = f.p();
    std::vector<int64_t> out(size_t(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        int64_t c = f.coeff(i);
        if (c > p / 2) c -= p;
        out[size_t(i)] = c;
    }
    return out;
}

/// Companion matrix over Z of a monic integer polynomial given low-to-high.
std::vector<int64_t> companion_z(const std::vector<int64_t>& chi) {
    const size_t n = chi.size() - 1;
    std::vector<int64_t> c(n * n, 0);
    for (size_t i = 0; i + 1 < n; ++i) c[(i + 1) * n + i] = 1;
    for (size_t i = 0; i < n; ++i) c[i * n + (n - 1)] = -chi[i];
    return c;
}

}  // namespace

ReducedInstance gen_reduced(int64_t p, const std::vector<FactorShape>& shape, uint64_t seed) {
    require_odd_prime(p);
    std::mt19937_64 rng(seed);
    SampledShape s = sample_factors(p, shape, rng);
    const size_t t = size_t(s.P.degree());

    ReducedInstance red;
    red.p = p;
    red.t = t;
    red.gbar = FpMatrix::companion(s.P);
    red.P = s.P;

    const auto basis = invariant_form_space(red.gbar);
    if (basis.empty()) throw shape_infeasible("no invariant symmetric forms exist");
    std::uniform_int_distribution<int64_t> coef(0, p - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int64_t> packed(t * (t + 1) / 2, 0);
        for (const auto& b : basis) {
            const int64_t c = coef(rng);
            if (c == 0) continue;
            for (size_t i = 0; i < packed.size(); ++i)
                packed[i] = fp_add(packed[i], fp_mul(c, b[i], p), p);
        }
        FpMatrix g = unpack_symmetric(p, t, packed);
        if (g.det() == 0 || is_split_fp(g)) continue;
        red.omega_gram = g;
        auto verdicts = validate_reduced(red);
        if (!all_pass(verdicts)) {
            std::string bad;
            for (const auto& v : verdicts)
                if (!v.pass) bad += v.name + " ";
            throw InternalError("GeneratorInvariant",
                                "generated instance failed validation: " + bad);
        }
        return red;
    }
    throw shape_infeasible("no non-split invariant form found after the retry budget");
}

FullInstance gen_full(int64_t p, size_t n, const std::vector<FactorShape>& shape, uint64_t seed,
                      int precision) {
    require_odd_prime(p);
    if (n < 4) throw ValidationError("RankTooSmall", "instance rank must be >= 4");
    std::mt19937_64 rng(seed);
    std::string last_error = "no candidate assembled";

    for (int attempt = 0; attempt < 64; ++attempt) {
        SampledShape s = sample_factors(p, shape, rng);
        const size_t t = size_t(s.P.degree());
        if (t >= n) throw shape_infeasible("shape degree t must be < n for a norm-1 vector");
        const size_t m = n - t;

        // p-scaled piece: integer lift of P with constant term exactly +-1
        // (the centered lift of a self-reciprocal polynomial is palindromic
        // up to sign, so its companion is orthogonal for a rational form).
        const std::vector<int64_t> chi_b = centered_lift(s.P);
        const std::vector<int64_t> cb = companion_z(chi_b);
        const auto basis_b = invariant_form_space_z(cb, t);
        if (basis_b.empty()) continue;

        // Unimodular piece: random integer palindromic monic of degree m,
        // coprime to P mod p.
        std::vector<int64_t> chi_a(m + 1, 0);
        {
            std::uniform_int_distribution<int64_t> small(-2, 2);
            bool ok = false;
            for (int tries = 0; tries < 256 && !ok; ++tries) {
                chi_a.assign(m + 1, 0);
                chi_a[m] = 1;
                chi_a[0] = 1;
                for (size_t i = 1; i <= m / 2; ++i) {
                    chi_a[i] = small(rng);
                    chi_a[m - i] = chi_a[i];
                }
                FpPoly chi_a_bar(p, chi_a);
                if (chi_a_bar.degree() != int(m)) continue;
                ok = gcd(chi_a_bar, s.P).is_one();
            }
            if (!ok) continue;
        }
        const std::vector<int64_t> ca = companion_z(chi_a);
        const auto basis_a = invariant_form_space_z(ca, m);
        if (basis_a.empty()) continue;

        auto sample_form = [&](const std::vector<std::vector<int64_t>>& basis, size_t dim,
                               auto&& accept) -> std::optional<std::vector<mpz_class>> {
            std::uniform_int_distribution<int64_t> coef(-3, 3);
            for (int tries = 0; tries < 64; ++tries) {
                std::vector<mpz_class> packed(dim * (dim + 1) / 2, 0);
                for (const auto& b : basis) {
                    const int64_t c = coef(rng);
                    if (c == 0) continue;
                    for (size_t i = 0; i < packed.size(); ++i) packed[i] += c * b[i];
                }
                std::vector<mpz_class> full(dim * dim);
                size_t k = 0;
                for (size_t i = 0; i < dim; ++i)
                    for (size_t j = i; j < dim; ++j, ++k) {
                        full[i * dim + j] = packed[k];
                        full[j * dim + i] = packed[k];
                    }
                if (accept(full)) return full;
            }
            return std::nullopt;
        };

        auto mod_p_matrix = [&](const std::vector<mpz_class>& full, size_t dim) {
            FpMatrix g(p, dim, dim);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j)
                    g.set(i, j, mpz_class(full[i * dim + j] % p).get_si());
            return g;
        };

        // S_B: invariant, unimodular mod p, non-split mod p.
        auto sb = sample_form(basis_b, t, [&](const std::vector<mpz_class>& full) {
            FpMatrix g = mod_p_matrix(full, t);
            return g.det() != 0 && !is_split_fp(g);
        });
        if (!sb) continue;
        // S_A: invariant, unimodular mod p, with unit (0,0) entry.
        auto sa = sample_form(basis_a, m, [&](const std::vector<mpz_class>& full) {
            FpMatrix g = mod_p_matrix(full, m);
            return g.det() != 0 && full[0] % p != 0;
        });
        if (!sa) continue;

        // Scale the unimodular piece so that q(x) = 1 for x = e_0 + e_m:
        // lambda * S_A[0][0] + p * S_B[0][0] = 1, lambda a p-adic unit.
        const mpq_class lambda =
            mpq_class(1 - p * (*sb)[0]) / mpq_class((*sa)[0]);

        FullInstance inst;
        inst.p = p;
        inst.precision = precision;
        inst.n = n;
        inst.gram = PadicMatrix(p, precision, n, n);
        inst.g = PadicMatrix(p, precision, n, n);
        inst.x.assign(n, PadicScalar(p, precision));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                const mpq_class v = lambda * (*sa)[i * m + j];
                inst.gram.set(i, j,
                              PadicScalar::of_rational(v.get_num(), v.get_den(), p, precision));
                inst.g.set(i, j, PadicScalar::of_int(ca[i * m + j], p, precision));
            }
        for (size_t i = 0; i < t; ++i)
            for (size_t j = 0; j < t; ++j) {
                inst.gram.set(m + i, m + j,
                              PadicScalar::of_rational(p * (*sb)[i * t + j], 1, p, precision));
                inst.g.set(m + i, m + j, PadicScalar::of_int(cb[i * t + j], p, precision));
            }
        inst.x[0] = PadicScalar::one(p, precision);
        inst.x[m] = PadicScalar::one(p, precision);

        try {
            (void)reduce_instance(inst);
            return inst;
        } catch (const Error& e) {
            last_error = std::string(e.code()) + ": " + e.what();
            continue;  // resample
        }
    }
    throw shape_infeasible("full-instance generator exhausted its retry budget (last: " +
                           last_error + ")");
}

FullInstance conjugate_instance(const FullInstance& inst, const FpMatrix& m_int) {
    // Entries of m_int are read as integer lifts; det != 0 mod p makes the
    // base change p-integrally unimodular.
    if (m_int.rows() != inst.n || m_int.cols() != inst.n)
        throw ValidationError("MatrixShape", "base-change matrix has the wrong size");
    if (m_int.det() == 0)
        throw ValidationError("NotUnimodular", "base-change matrix is singular mod p");
    PadicMatrix m(inst.p, inst.precision, inst.n, inst.n);
    for (size_t i = 0; i < inst.n; ++i)
        for (size_t j = 0; j < inst.n; ++j)
            m.set(i, j, PadicScalar::of_int(m_int.at(i, j), inst.p, inst.precision));
    const PadicMatrix minv = padic_inverse(m);
    FullInstance out = inst;
    out.gram = m.transpose() * inst.gram * m;
    out.g = minv * inst.g * m;
    out.x = minv.apply(inst.x);
    return out;
}

}  // namespace ggpint
