#ifndef GGPINT_INSTANCE_IO_HPP
#define GGPINT_INSTANCE_IO_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <variant>

#include "ggpint/instance.hpp"
#include "ggpint/intersection.hpp"
#include "ggpint/oracle.hpp"

namespace ggpint {

using json = nlohmann::json;

// Polynomials travel as arrays of integer coefficients, low-to-high.
json poly_to_json(const FpPoly& f);
FpPoly poly_from_json(const json& j, int64_t p, const std::string& path);

json fp_matrix_to_json(const FpMatrix& m);
FpMatrix fp_matrix_from_json(const json& j, int64_t p, const std::string& path);

/// p-adic scalars print as exact rationals "a" or "a/b" (b a power of p).
std::string padic_to_string(const PadicScalar& s);
PadicScalar padic_from_string(const std::string& text, int64_t p, int prec,
                              const std::string& path);

json full_to_json(const FullInstance& inst);
FullInstance full_from_json(const json& j);

json reduced_to_json(const ReducedInstance& red);
ReducedInstance reduced_from_json(const json& j);

/// Dispatch on the "layer" field ("full" | "reduced").
std::variant<FullInstance, ReducedInstance> instance_from_json(const json& j);

json report_to_json(const IntersectionReport& rep);
json agreement_to_json(const OracleAgreement& oa);
json strata_to_json(const std::vector<Stratum>& strata);
json verdicts_to_json(const std::vector<Verdict>& vs);

json jordan_to_json(const JordanData& jd);
JordanData jordan_from_json(const json& j);

/// FNV-1a of a canonical (sorted-key) dump; keys report identity.
uint64_t fnv1a64(const std::string& data);
std::string input_hash_hex(const json& j);

}  // namespace ggpint

#endif
