#pragma once

#include <json.hpp>

#include "endotriv/endo.hpp"
#include "endotriv/steinberg.hpp"

namespace endotriv {

using Json = nlohmann::ordered_json;

Json to_json(const AbGroup& a);
Json to_json(const TReport& r);
Json to_json(const CentralizerReport& r);
Json to_json(const FusionBounds& b);
Json to_json(const WebbReport& w);

/// {"dims_by_degree", "homology_dims", "euler", "brown_ok"}.
Json complex_json(const FqComplex& c, const std::vector<std::size_t>& homology, bool brown_ok);

}  // namespace endotriv
