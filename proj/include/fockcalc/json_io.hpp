#pragma once

#include <json.hpp>

#include "fockcalc/wco.hpp"

namespace fockcalc {

nlohmann::ordered_json to_json(const AffineMap& map);
nlohmann::ordered_json to_json(const LinearFractionalMap& map);
nlohmann::ordered_json to_json(const CompositionMap& map);
nlohmann::ordered_json to_json(const WcoWeight& weight);

// {"alpha", "order", "dim", "re": [[...]], "im": [[...]]}, row-major.
nlohmann::ordered_json to_json(const OperatorMatrix& m);

}  // namespace fockcalc
