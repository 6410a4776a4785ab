#pragma once

#include <json.hpp>

#include "fockdual/decompose.hpp"
#include "fockdual/diagram.hpp"
#include "fockdual/dual_pair.hpp"
#include "fockdual/fock.hpp"

namespace fockdual {

// Rationals travel as exact strings ("3", "-11/2"); mode indices as [p, tau].

nlohmann::json to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StateVector& v);
StateVector state_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadraticOperator& op);
QuadraticOperator quadratic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PairingTable& table);
PairingTable pairing_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DecompositionReport& report);
// Reports round-trip through everything except the highest-weight vectors
// and module weight lists, which are derived data.
DecompositionReport report_from_json(const nlohmann::json& j);

nlohmann::json generators_to_json(const DualPairRealization& pair);

}  // namespace fockdual
