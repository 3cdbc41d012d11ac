#pragma once

#include <json.hpp>

#include "bistab/circle.hpp"
#include "bistab/quadrature.hpp"
#include "bistab/stability_form.hpp"

namespace bistab {

struct TableRow;

// Exact scalars serialize as decimal strings "n" / "n/d" so reports
// round-trip losslessly; big integers use a JSON number when they fit
// in 64 bits and a string otherwise.

void to_json(nlohmann::json& j, const Rational& value);
void from_json(const nlohmann::json& j, Rational& value);

nlohmann::json bigint_to_json(const BigInt& value);
BigInt bigint_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const EigenLevel& level);
void from_json(const nlohmann::json& j, EigenLevel& level);

void to_json(nlohmann::json& j, const HypersurfaceModel& model);
// The family structs validate in their constructors, so parsing goes through
// a factory rather than nlohmann's default-construct-and-fill path.
HypersurfaceModel model_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const StabilityForm& form);

void to_json(nlohmann::json& j, const StabilityCertificate& cert);

void to_json(nlohmann::json& j, const IndexReport& report);
void from_json(const nlohmann::json& j, IndexReport& report);

void to_json(nlohmann::json& j, const QuadratureCheck& check);
void to_json(nlohmann::json& j, const VariationResult& result);

void to_json(nlohmann::json& j, const TableRow& row);
TableRow table_row_from_json(const nlohmann::json& j);

}  // namespace bistab
