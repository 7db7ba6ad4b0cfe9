#include "ggpint/instance.hpp"

#include <algorithm>
#include <sstream>

namespace ggpint {

bool all_pass(const std::vector<Verdict>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

PadicScalar inner(const PadicMatrix& gram, const std::vector<PadicScalar>& u,
                  const std::vector<PadicScalar>& v) {
    PadicScalar acc(gram.p(), gram.precision());
    for (size_t i = 0; i < u.size(); ++i) {
        PadicScalar row(gram.p(), gram.precision());
        for (size_t j = 0; j < v.size(); ++j) row = row + gram.at(i, j) * v[j];
        acc = acc + u[i] * row;
    }
    return acc;
}

std::vector<PadicScalar> column(const PadicMatrix& m, size_t j) {
    std::vector<PadicScalar> c;
    c.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) c.push_back(m.at(i, j));
    return c;
}

}  // namespace

void FullInstance::validate() const {
    if (n < 4) throw ValidationError("RankTooSmall", "instance rank must be >= 4");
    if (gram.rows() != n || gram.cols() != n || g.rows() != n || g.cols() != n ||
        x.size() != n)
        throw ValidationError("MatrixShape", "instance components disagree on the rank");
    if (!gram.is_symmetric()) throw not_symmetric("Gram matrix is not symmetric");
    // Nondegeneracy: det valuation must be certifiable.
    (void)det_valuation(gram);
    // Isometry: g^T gram g - gram vanishes at precision.
    const PadicMatrix d = g.transpose() * gram * g - gram;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!d.at(i, j).is_zero())
                throw ValidationError("NotIsometry", "g does not preserve the form at (" +
                                                         std::to_string(i) + "," +
                                                         std::to_string(j) + ")");
    const PadicScalar qx = inner(gram, x, x);
    if (!(qx == PadicScalar::one(p, precision)))
        throw ValidationError("NormNotOne", "the distinguished vector must have norm 1");
}

std::vector<Verdict> FullInstance::warnings() const {
    std::vector<Verdict> w;
    const int hasse = hasse_invariant(gram);
    w.push_back({"hasse_invariant_minus_one", hasse == -1,
                 hasse == -1 ? "Hasse invariant is -1"
                             : "Hasse invariant is +1; the space does not model a basic-locus "
                               "fixed space"});
    return w;
}

PadicMatrix fundamental_matrix(const FullInstance& inst) {
    inst.validate();
    const size_t n = inst.n;
    // Orbit vectors x, gx, ..., g^{n-1}x.
    std::vector<std::vector<PadicScalar>> orbit;
    orbit.push_back(inst.x);
    for (size_t i = 1; i < n; ++i) orbit.push_back(inst.g.apply(orbit.back()));
    PadicMatrix t(inst.p, inst.precision, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            PadicScalar v = inner(inst.gram, orbit[i], orbit[j]);
            t.set(i, j, v);
            t.set(j, i, v);
        }
    return t;
}

bool is_regular_semisimple(const FullInstance& inst) {
    try {
        (void)smith_invariants(fundamental_matrix(inst));
        return true;
    } catch (const PrecisionError& e) {
        if (e.code() == "SingularAtPrecision") return false;
        throw;
    }
}

bool is_minuscule(const FullInstance& inst) {
    std::vector<long> r;
    try {
        r = smith_invariants(fundamental_matrix(inst)).invariants;
    } catch (const PrecisionError& e) {
        if (e.code() == "SingularAtPrecision") return false;
        throw;
    }
    return r.front() == 1 && r.back() >= 0;
}

std::pair<ReducedInstance, DerivationLog> reduce_instance(const FullInstance& inst) {
    inst.validate();
    const int64_t p = inst.p;
    const int prec = inst.precision;
    const size_t n = inst.n;

    DerivationLog log;
    log.verdicts = inst.warnings();

    // Orbit basis B with columns x, gx, ..., g^{n-1}x.
    PadicMatrix b(p, prec, n, n);
    {
        std::vector<PadicScalar> v = inst.x;
        for (size_t j = 0; j < n; ++j) {
            for (size_t i = 0; i < n; ++i) b.set(i, j, v[i]);
            if (j + 1 < n) v = inst.g.apply(v);
        }
    }
    log.orbit_basis = b;

    PadicMatrix t = fundamental_matrix(inst);
    log.fundamental = t;

    SmithResult sm;
    try {
        sm = smith_invariants(t);
    } catch (const PrecisionError& e) {
        if (e.code() == "SingularAtPrecision")
            throw not_minuscule("fundamental matrix singular at precision: g is not regular "
                                "semisimple");
        throw;
    }
    log.invariants = sm.invariants;

    if (sm.invariants.front() != 1 || sm.invariants.back() < 0)
        throw not_minuscule("Cartan invariants of T are not {0,1} with r_1 = 1");
    const size_t t_dim =
        size_t(std::count(sm.invariants.begin(), sm.invariants.end(), 1L));

    // Stability of L(g): the matrix of g on the orbit basis is the
    // companion matrix of g's characteristic polynomial; its last column
    // solves B c = g^n x and must be p-integral.
    const PadicMatrix binv = padic_inverse(b);
    std::vector<PadicScalar> gn = inst.g.apply(column(b, n - 1));
    std::vector<PadicScalar> c = binv.apply(gn);
    for (const auto& ci : c)
        if (!ci.is_integral())
            throw g_does_not_stabilize(
                "characteristic polynomial of g has non-integral coefficients");
    PadicMatrix companion(p, prec, n, n);
    for (size_t i = 0; i + 1 < n; ++i) companion.set(i + 1, i, PadicScalar::one(p, prec));
    for (size_t i = 0; i < n; ++i) companion.set(i, n - 1, c[i]);

    // Adapted bases: F = B V spans L(g), F' = B T^{-1} U^{-1} spans the
    // dual, with F_i = p^{r_i} F'_i.
    const PadicMatrix tinv = padic_inverse(t);
    const PadicMatrix uinv = padic_inverse(sm.U);
    const PadicMatrix f_basis = b * sm.V;
    const PadicMatrix fdual = b * tinv * uinv;
    log.lattice_basis = f_basis;
    log.dual_basis = fdual;

    // Gram of the dual basis; p * <.,.> reduced mod p on the r_i = 1 block
    // is the form on Omega_0.
    const PadicMatrix dual_gram = fdual.transpose() * inst.gram * fdual;
    FpMatrix omega(p, t_dim, t_dim);
    for (size_t i = 0; i < t_dim; ++i)
        for (size_t j = 0; j < t_dim; ++j)
            omega.set(i, j, dual_gram.at(i, j).shifted_residue_mod_p(1));

    // Induced action on the dual basis: (F')^{-1} g F' = U T C T^{-1} U^{-1}.
    const PadicMatrix gdual = sm.U * t * companion * tinv * uinv;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!gdual.at(i, j).is_integral())
                throw g_does_not_stabilize("g does not stabilize the dual lattice");
    FpMatrix gbar(p, t_dim, t_dim);
    for (size_t i = 0; i < t_dim; ++i)
        for (size_t j = 0; j < t_dim; ++j) gbar.set(i, j, gdual.at(i, j).residue_mod_p());

    ReducedInstance red;
    red.p = p;
    red.t = t_dim;
    red.omega_gram = omega;
    red.gbar = gbar;
    red.P = matrix_char_poly(gbar);

    auto verdicts = validate_reduced(red);
    for (const auto& v : verdicts) log.verdicts.push_back(v);
    for (const auto& v : verdicts) {
        if (v.pass) continue;
        if (v.name == "omega_nonsplit")
            throw split_omega("reduced form is split: " + v.detail);
        throw ValidationError("ReducedInvariant", v.name + ": " + v.detail);
    }

    // Type bound t <= t_max (warning only; depends on the ambient space).
    const int tm = t_max(int(n), det_square_class(inst.gram), p);
    log.verdicts.push_back({"type_within_t_max", int(t_dim) <= tm,
                            "t = " + std::to_string(t_dim) + ", t_max = " + std::to_string(tm)});

    return {std::move(red), std::move(log)};
}

std::vector<Verdict> validate_reduced(const ReducedInstance& red) {
    std::vector<Verdict> out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };

    const bool shape_ok = red.omega_gram.rows() == red.t && red.omega_gram.cols() == red.t &&
                          red.gbar.rows() == red.t && red.gbar.cols() == red.t &&
                          red.P.degree() == int(red.t) && red.P.p() == red.p &&
                          red.omega_gram.p() == red.p && red.gbar.p() == red.p;
    add("shape", shape_ok, "component dimensions and primes agree");
    if (!shape_ok) return out;

    add("t_even_positive", red.t >= 2 && red.t % 2 == 0, "t = " + std::to_string(red.t));
    add("omega_symmetric", red.omega_gram.is_symmetric(), "");

    const bool nondeg = red.omega_gram.det() != 0;
    add("omega_nondegenerate", nondeg, "");
    if (nondeg && red.t % 2 == 0)
        add("omega_nonsplit", !is_split_fp(red.omega_gram),
            "(-1)^d det must be a non-square");

    const FpMatrix gtg = red.gbar.transpose() * red.omega_gram * red.gbar;
    add("gbar_isometry", gtg == red.omega_gram, "");

    const FpPoly cp = matrix_char_poly(red.gbar);
    add("char_poly_matches", cp == red.P, "P must be the characteristic polynomial of gbar");
    add("cyclic_min_eq_char", matrix_min_poly(red.gbar) == cp,
        "gbar must act cyclically (minimal = characteristic)");

    bool selfrec = false;
    if (red.P.is_monic() && red.P.constant_term() != 0) selfrec = is_self_reciprocal(red.P);
    add("P_self_reciprocal", selfrec, "");
    return out;
}

bool is_split_fp(const FpMatrix& gram) {
    if (!gram.is_symmetric())
        throw not_symmetric("splitness test requires a symmetric matrix");
    if (gram.rows() % 2 != 0)
        throw odd_dimension("splitness test requires even dimension");
    const int64_t d = gram.det();
    if (d == 0) throw ValidationError("DegenerateForm", "splitness test requires nondegeneracy");
    const size_t half = gram.rows() / 2;
    const int64_t disc =
        (half % 2 == 0) ? d : fp_neg(d, gram.p());  // (-1)^d * det
    return fp_is_square(disc, gram.p());
}

int t_max(int n, const SquareClass& det_class, int64_t p) {
    if (n % 2 != 0) return n - 1;
    // Square class of (-1)^{n/2}.
    const SquareClass target{0, (n / 2) % 2 == 0 || fp_legendre(p - 1, p) == 1};
    return det_class == target ? n - 2 : n;
}

}  // namespace ggpint
