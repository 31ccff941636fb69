#pragma once

#include <json.hpp>

#include "lzpath/energy.hpp"
#include "lzpath/laurent.hpp"
#include "lzpath/onedsum.hpp"

namespace lzpath {

// {"elements": [key...], "edges": {"j": [[src,dst]...]}, "source": idx}
// with f_j edges and elements in canonical order
nlohmann::json graph_to_json(const CrystalGraph& g);

// sparse {"exp": coeff}
nlohmann::json poly_to_json(const LaurentPolynomial& p);

// {"H": {key: value}, ...} keyed by canonical element serialization
nlohmann::json energy_table_to_json(TableSet& ts, const LevelZeroDominantWeight& a,
                                    const LevelZeroDominantWeight& b);
nlohmann::json degree_table_to_json(TableSet& ts, const LevelZeroDominantWeight& shape);

nlohmann::json report_to_json(const CheckReport& rep);

}  // namespace lzpath
