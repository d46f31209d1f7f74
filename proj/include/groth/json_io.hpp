#pragma once

#include <json.hpp>

#include "groth/expansion.hpp"
#include "groth/insertion.hpp"
#include "groth/polynomial.hpp"
#include "groth/quiver.hpp"

namespace groth {

using nlohmann::json;

json to_json(const Permutation& p);
json to_json(const Partition& p);
json to_json(const IncreasingTableau& t);
json to_json(const DecreasingTableau& t);
json to_json(const SetValuedTableau& t);
json to_json(const ColumnDiagram& d);
json to_json(const Expansion& e);
json to_json(const SparsePolynomial& p);
json to_json(const QuiverExpansion& e);
json to_json(const UniversalExpansion& e);
json to_json(const InsertionResult& r);
json to_json(const std::vector<InsertionStep>& steps);
json to_json(const KmsFactorization& f);
json to_json(const FactorSequence& f);
json to_json(const QuivstabReport& r);

Permutation permutation_from_json(const json& j);
Partition partition_from_json(const json& j);
IncreasingTableau increasing_from_json(const json& j);
DecreasingTableau decreasing_from_json(const json& j);
SetValuedTableau setvalued_from_json(const json& j);
RankConditions ranks_from_json(const json& j);

}  // namespace groth
