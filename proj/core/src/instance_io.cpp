#include "ggpint/instance_io.hpp"

#include <sstream>

namespace ggpint {

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
    throw ValidationError("MalformedInput", path + ": " + why);
}

int64_t get_int(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) bad_field(path + "." + key, "missing field");
    const json& v = j.at(key);
    if (!v.is_number_integer()) bad_field(path + "." + key, "expected an integer");
    return v.get<int64_t>();
}

}  // namespace

json poly_to_json(const FpPoly& f) {
    json a = json::array();
    for (int i = 0; i <= f.degree(); ++i) a.push_back(f.coeff(i));
    return a;
}

FpPoly poly_from_json(const json& j, int64_t p, const std::string& path) {
    if (!j.is_array()) bad_field(path, "expected an array of coefficients");
    std::vector<int64_t> c;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            bad_field(path + "[" + std::to_string(i) + "]", "expected an integer");
        c.push_back(j[i].get<int64_t>());
    }
    return FpPoly(p, std::move(c));
}

json fp_matrix_to_json(const FpMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

FpMatrix fp_matrix_from_json(const json& j, int64_t p, const std::string& path) {
    if (!j.is_array() || j.empty()) bad_field(path, "expected a non-empty array of rows");
    const size_t rows = j.size();
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) bad_field(path + "[0]", "expected a non-empty row");
    FpMatrix m(p, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            bad_field(path + "[" + std::to_string(i) + "]", "ragged row");
        for (size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_number_integer())
                bad_field(path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]",
                          "expected an integer");
            m.set(i, c, j[i][c].get<int64_t>());
        }
    }
    return m;
}

std::string padic_to_string(const PadicScalar& s) {
    if (s.is_zero()) return "0";
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), static_cast<unsigned long>(s.p()),
                  static_cast<unsigned long>(std::abs(s.valuation())));
    // Centered unit representative: round-trips to the same residue and
    // keeps small negative values readable.
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(s.p()),
                  static_cast<unsigned long>(s.precision()));
    mpz_class u = s.unit();
    if (u > mod / 2) u -= mod;
    std::ostringstream os;
    if (s.valuation() >= 0)
        os << mpz_class(u * shift);
    else
        os << u << "/" << shift;
    return os.str();
}

PadicScalar padic_from_string(const std::string& text, int64_t p, int prec,
                              const std::string& path) {
    const auto slash = text.find('/');
    try {
        const mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
        const mpz_class den(slash == std::string::npos ? std::string("1")
                                                       : text.substr(slash + 1));
        if (den == 0) bad_field(path, "zero denominator");
        return PadicScalar::of_rational(num, den, p, prec);
    } catch (const std::invalid_argument&) {
        bad_field(path, "expected a rational \"a\" or \"a/b\", got \"" + text + "\"");
    }
}

namespace {

json padic_matrix_to_json(const PadicMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(padic_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PadicMatrix padic_matrix_from_json(const json& j, int64_t p, int prec, size_t n,
                                   const std::string& path) {
    if (!j.is_array() || j.size() != n) bad_field(path, "expected " + std::to_string(n) + " rows");
    PadicMatrix m(p, prec, n, n);
    for (size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            bad_field(path + "[" + std::to_string(i) + "]", "ragged row");
        for (size_t c = 0; c < n; ++c) {
            const std::string cell_path =
                path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]";
            if (!j[i][c].is_string()) bad_field(cell_path, "expected a rational string");
            m.set(i, c, padic_from_string(j[i][c].get<std::string>(), p, prec, cell_path));
        }
    }
    return m;
}

}  // namespace

json full_to_json(const FullInstance& inst) {
    json x = json::array();
    for (const auto& xi : inst.x) x.push_back(padic_to_string(xi));
    return json{{"layer", "full"},
                {"p", inst.p},
                {"precision", inst.precision},
                {"n", inst.n},
                {"gram", padic_matrix_to_json(inst.gram)},
                {"g", padic_matrix_to_json(inst.g)},
                {"x", x}};
}

FullInstance full_from_json(const json& j) {
    if (!j.is_object()) bad_field("$", "expected an object");
    FullInstance inst;
    inst.p = get_int(j, "p", "$");
    require_odd_prime(inst.p);
    inst.precision = j.contains("precision") ? int(get_int(j, "precision", "$"))
                                             : kDefaultPrecision;
    if (inst.precision < 1) bad_field("$.precision", "must be >= 1");
    inst.n = size_t(get_int(j, "n", "$"));
    if (!j.contains("gram")) bad_field("$.gram", "missing field");
    inst.gram = padic_matrix_from_json(j.at("gram"), inst.p, inst.precision, inst.n, "$.gram");
    if (!j.contains("g")) bad_field("$.g", "missing field");
    inst.g = padic_matrix_from_json(j.at("g"), inst.p, inst.precision, inst.n, "$.g");
    if (!j.contains("x") || !j.at("x").is_array() || j.at("x").size() != inst.n)
        bad_field("$.x", "expected an array of n rational strings");
    for (size_t i = 0; i < inst.n; ++i) {
        const std::string path = "$.x[" + std::to_string(i) + "]";
        if (!j.at("x")[i].is_string()) bad_field(path, "expected a rational string");
        inst.x.push_back(
            padic_from_string(j.at("x")[i].get<std::string>(), inst.p, inst.precision, path));
    }
    return inst;
}

json reduced_to_json(const ReducedInstance& red) {
    return json{{"layer", "reduced"},
                {"p", red.p},
                {"t", red.t},
                {"omega_gram", fp_matrix_to_json(red.omega_gram)},
                {"gbar", fp_matrix_to_json(red.gbar)},
                {"P", poly_to_json(red.P)}};
}

ReducedInstance reduced_from_json(const json& j) {
    if (!j.is_object()) bad_field("$", "expected an object");
    ReducedInstance red;
    red.p = get_int(j, "p", "$");
    require_odd_prime(red.p);
    red.t = size_t(get_int(j, "t", "$"));
    if (!j.contains("omega_gram")) bad_field("$.omega_gram", "missing field");
    red.omega_gram = fp_matrix_from_json(j.at("omega_gram"), red.p, "$.omega_gram");
    if (!j.contains("gbar")) bad_field("$.gbar", "missing field");
    red.gbar = fp_matrix_from_json(j.at("gbar"), red.p, "$.gbar");
    if (!j.contains("P")) bad_field("$.P", "missing field");
    red.P = poly_from_json(j.at("P"), red.p, "$.P");
    return red;
}

std::variant<FullInstance, ReducedInstance> instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("layer") || !j.at("layer").is_string())
        bad_field("$.layer", "expected \"full\" or \"reduced\"");
    const std::string layer = j.at("layer").get<std::string>();
    if (layer == "full") return full_from_json(j);
    if (layer == "reduced") return reduced_from_json(j);
    bad_field("$.layer", "unknown layer \"" + layer + "\"");
}

json report_to_json(const IntersectionReport& rep) {
    json j{{"nonempty", rep.nonempty},
           {"point_count", rep.point_count},
           {"p_gt_c", rep.p_gt_c},
           {"notes", rep.notes}};
    j["Q"] = rep.Q ? poly_to_json(*rep.Q) : json(nullptr);
    j["mQ"] = rep.mQ ? json(*rep.mQ) : json(nullptr);
    j["c"] = rep.c ? json(*rep.c) : json(nullptr);
    j["total"] = rep.total ? json(*rep.total) : json(nullptr);
    if (rep.point_count_per_factor) j["point_count_per_factor"] = *rep.point_count_per_factor;
    return j;
}

json agreement_to_json(const OracleAgreement& oa) {
    return json{{"oracle_count", oa.oracle_count},
                {"count_agrees", oa.count_agrees},
                {"strata_total", oa.strata_total},
                {"strata_nonempty", oa.strata_nonempty},
                {"dl_checked", oa.dl_checked},
                {"dl_agrees", oa.dl_agrees},
                {"mult_checked", oa.mult_checked},
                {"mult_agrees", oa.mult_agrees},
                {"all_agree", oa.all_agree()},
                {"notes", oa.notes}};
}

json strata_to_json(const std::vector<Stratum>& strata) {
    json arr = json::array();
    for (const auto& s : strata) {
        json j{{"divisor", poly_to_json(s.divisor)},
               {"dim_u", s.u_basis.cols()},
               {"u_basis", fp_matrix_to_json(s.u_basis)},
               {"isotropic", s.isotropic}};
        if (s.isotropic) {
            j["middle"] = poly_to_json(s.middle);
            j["type"] = s.type;
            j["nonempty"] = s.nonempty;
            j["quotient_gram"] = fp_matrix_to_json(s.quotient_gram);
            j["quotient_g"] = fp_matrix_to_json(s.quotient_g);
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

json verdicts_to_json(const std::vector<Verdict>& vs) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back(json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    return arr;
}

json jordan_to_json(const JordanData& jd) {
    return json{{"p", jd.p},
                {"d", jd.d},
                {"H1", fp_matrix_to_json(jd.h1)},
                {"H2", jd.h2},
                {"H4", jd.h4}};
}

JordanData jordan_from_json(const json& j) {
    if (!j.is_object()) bad_field("$", "expected an object");
    JordanData jd;
    jd.p = get_int(j, "p", "$");
    require_odd_prime(jd.p);
    jd.d = int(get_int(j, "d", "$"));
    if (jd.d < 1) bad_field("$.d", "d must be >= 1");
    if (jd.d == 1) {
        jd.h1 = FpMatrix(jd.p, 0, 0);
    } else {
        if (!j.contains("H1")) bad_field("$.H1", "missing field");
        jd.h1 = fp_matrix_from_json(j.at("H1"), jd.p, "$.H1");
    }
    if (jd.d > 1) {
        if (!j.contains("H2") || !j.at("H2").is_array() || j.at("H2").size() != size_t(jd.d - 1))
            bad_field("$.H2", "expected an array of d-1 integers");
        for (const auto& v : j.at("H2")) {
            if (!v.is_number_integer()) bad_field("$.H2", "expected integers");
            jd.h2.push_back(fp_norm(v.get<int64_t>(), jd.p));
        }
    }
    jd.h4 = fp_norm(get_int(j, "H4", "$"), jd.p);
    jd.validate();
    return jd;
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string input_hash_hex(const json& j) {
    std::ostringstream os;
    os << std::hex << fnv1a64(j.dump());
    return os.str();
}

}  // namespace ggpint
