#pragma once

#include <variant>

#include <nlohmann/json.hpp>

#include "majorana/geomeasure.hpp"
#include "majorana/marginals.hpp"
#include "majorana/slocc.hpp"

namespace majorana {

// Document formats:
//   state          {"n", "basis": "dicke"|"computational", "re": [...], "im": [...]}
//   constellation  {"n", "points": [{"alpha", "beta", "mult"}]}   (beta = pi is infinity)
//   density matrix {"dim", "basis": "symmetric"|"computational", "k", "re": [[...]], "im": [[...]]}
// Readers throw InvalidArgument on malformed documents.

using AnyState = std::variant<SymmetricState, FullState>;

nlohmann::json to_json(const SymmetricState& s);
nlohmann::json to_json(const FullState& f);
nlohmann::json to_json(const Constellation& c);
nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const DegeneracyConfiguration& d);
nlohmann::json to_json(const CoherentPoint& p);
nlohmann::json to_json(const EntanglementReport& r);

/// Accepts a state document or a constellation document.
AnyState state_from_json(const nlohmann::json& doc);
/// Like state_from_json but requires a symmetric state; computational inputs
/// must be permutation symmetric within tol.
SymmetricState symmetric_from_json(const nlohmann::json& doc, double tol = kDefaultTol);
FullState full_from_json(const nlohmann::json& doc);
Constellation constellation_from_json(const nlohmann::json& doc);
DensityMatrix density_from_json(const nlohmann::json& doc, double tol = kDefaultTol);

}  // namespace majorana
