#ifndef KACLIM_JSON_IO_HPP
#define KACLIM_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "kaclim/bk.hpp"
#include "kaclim/obstructions.hpp"
#include "kaclim/poset.hpp"
#include "kaclim/weyl.hpp"

namespace kaclim {

// Key order is fixed everywhere so repeated runs serialize byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const SubsetClass& cls);
Json subset_json(Subset s);  // sorted 1-based index array
Json to_json(const SphericalPoset& poset);
Json to_json(const CorePoset& core);
Json to_json(const IncidenceGraph& graph, const ForestDecomposition& forest);
Json to_json(const Realization& realization);
Json to_json(const PoincareSeries& series);
Json series_with_coefficients(const PoincareSeries& series, int max_degree);
Json lim_table_json(const BKReport& report);
Json to_json(const BKReport& report);
Json to_json(const ObstructionReport& report);

}  // namespace kaclim

#endif
