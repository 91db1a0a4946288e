#include "kaclim/json_io.hpp"

#include <map>

namespace kaclim {

Json subset_json(Subset s) {
  Json arr = Json::array();
  for (int i : subset_indices(s)) arr.push_back(i + 1);
  return arr;
}

Json to_json(const SubsetClass& cls) {
  Json out;
  out["kind"] = subset_kind_name(cls.kind);
  Json comps = Json::array();
  for (const auto& c : cls.components) {
    Json comp;
    Json verts = Json::array();
    for (int v : c.vertices) verts.push_back(v + 1);
    comp["vertices"] = verts;
    comp["kind"] = subset_kind_name(c.kind);
    comps.push_back(comp);
  }
  out["components"] = comps;
  return out;
}

Json to_json(const SphericalPoset& poset) {
  Json out;
  Json elems = Json::array();
  for (Subset s : poset.elements) elems.push_back(subset_json(s));
  out["elements"] = elems;
  Json maxima = Json::array();
  for (Subset s : poset.maximal) maxima.push_back(subset_json(s));
  out["maximal"] = maxima;
  out["sphericity"] = poset.sphericity;
  return out;
}

Json to_json(const CorePoset& core) {
  Json out;
  Json elems = Json::array();
  for (Subset s : core.elements) elems.push_back(subset_json(s));
  out["elements"] = elems;
  out["initial"] = subset_json(core.initial);
  out["essential_sphericity"] = core.essential_sphericity;
  return out;
}

Json to_json(const IncidenceGraph& graph, const ForestDecomposition& forest) {
  Json out;
  out["over_core"] = graph.over_core;
  Json verts = Json::array();
  for (int v : graph.vertices)
    verts.push_back(graph.labels.empty() ? Json(v) : subset_json(graph.labels[v]));
  out["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    Json edge;
    edge["element"] = graph.labels.empty() ? Json(e.element) : subset_json(graph.labels[e.element]);
    edge["endpoints"] = Json::array({e.a, e.b});
    edges.push_back(edge);
  }
  out["edges"] = edges;
  out["forest_edges"] = forest.forest_edges;
  out["unspanned_edges"] = forest.unspanned;
  Json cycles = Json::array();
  for (const auto& c : forest.cycles) {
    Json cy;
    cy["edge"] = c.edge;
    cy["length"] = int(c.path_edges.size()) + 1;
    cycles.push_back(cy);
  }
  out["cycles"] = cycles;
  return out;
}

Json to_json(const Realization& realization) {
  Json out;
  out["rank"] = realization.rank;
  out["variant"] = realization.variant == Variant::Full ? "full" : "derived";
  Json gens = Json::array();
  for (const Mat& g : realization.generators) {
    Json rows = Json::array();
    for (int i = 0; i < g.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < g.cols(); ++j) row.push_back(rat_to_string(g(i, j)));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  out["generators"] = gens;
  return out;
}

Json to_json(const PoincareSeries& series) {
  Json out;
  Json num = Json::array();
  for (const Int& c : series.num.c) num.push_back(c.get_str());
  out["numerator"] = num;
  out["denominator_factors"] = series.denom;
  out["display"] = series.to_string();
  return out;
}

Json series_with_coefficients(const PoincareSeries& series, int max_degree) {
  Json out;
  out["series"] = to_json(series);
  Json coeffs;
  std::vector<Int> c = series.expand(max_degree);
  for (int m = 0; m <= max_degree; ++m) coeffs[std::to_string(m)] = c[m].get_str();
  out["coefficients"] = coeffs;
  return out;
}

Json lim_table_json(const BKReport& report) {
  Json lim;
  for (int i = 0; i < int(report.lim.size()) && i <= 2; ++i) {
    Json row;
    for (int m = 0; m <= report.max_degree; m += 2) row[std::to_string(m)] = report.lim[i][m];
    lim[std::to_string(i)] = row;
  }
  Json out;
  out["lim"] = lim;
  return out;
}

Json to_json(const BKReport& report) {
  Json out;
  out["variant"] = report.variant == Variant::Full ? "full" : "derived";
  out["max_degree"] = report.max_degree;
  out["torus_rank"] = report.torus_rank;
  out["h_dims"] = report.h_dims;
  Json nil;
  for (int m = 0; m <= report.max_degree; m += 2) nil[std::to_string(m)] = report.nilpotent_dims[m];
  out["nilpotent_dims"] = nil;
  out.update(lim_table_json(report));
  if (report.lim0_series) out["lim0_series"] = to_json(*report.lim0_series);
  if (report.lim1_series) out["lim1_series"] = to_json(*report.lim1_series);
  out["euler_series"] = to_json(report.euler);
  out["lim2_vanishes"] = report.lim2_vanishes;
  if (!report.ring_note.empty()) out["ring_note"] = report.ring_note;
  return out;
}

Json to_json(const ObstructionReport& report) {
  Json out;
  Json per;
  std::map<int, long> collapsed;
  for (const auto& [nj, rank] : report.per_degree) collapsed[nj] += rank;
  for (const auto& [nj, rank] : collapsed) per[std::to_string(nj)] = rank;
  out["per_degree"] = per;
  out["total_rank"] = report.total_rank;
  out["kernel_total"] = report.kernel_total;
  out["v_rank"] = report.v_rank;
  return out;
}

}  // namespace kaclim
