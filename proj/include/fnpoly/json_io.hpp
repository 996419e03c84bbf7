#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "fnpoly/freeprob.hpp"
#include "fnpoly/multipoly.hpp"
#include "fnpoly/partitions.hpp"

namespace fnpoly {

/// {"vars": [...], "terms": [{"exponents": [...], "coeff": "..."}]} with
/// terms in descending lexicographic order of exponents.
nlohmann::ordered_json poly_to_json(const MultiPoly& poly, std::span<const std::string> names);
MultiPoly poly_from_json(const nlohmann::json& j);

/// Canonical serialization: compact JSON with the key order above.
std::string canonical_json(const MultiPoly& poly, std::span<const std::string> names);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// CSV "k,moment" rows; with `numeric` also "numeric,abs_diff".
std::string moments_csv(const MomentTable& table);
std::string moments_csv(const MomentTable& table, const std::vector<QuadratureMoment>& numeric);

}  // namespace fnpoly
