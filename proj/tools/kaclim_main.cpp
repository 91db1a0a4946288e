// Command-line front end: classification, derived-limit tables, cohomology
// dimensions, obstruction ranks, and the self-check battery, from a JSON
// matrix file. All output is deterministic.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kaclim/bk.hpp"
#include "kaclim/error.hpp"
#include "kaclim/json_io.hpp"
#include "kaclim/obstructions.hpp"
#include "kaclim/verify.hpp"

namespace {

using namespace kaclim;

struct Options {
  std::string input;
  int max_degree = 20;
  std::string variant;  // "", "full", "derived"
  bool json = false;
  std::string target;
};

GcmInput load_input(const Options& opt) {
  std::ifstream in(opt.input);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open '" + opt.input + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  GcmInput parsed = parse_gcm(buffer.str());
  if (opt.variant == "full") parsed.variant = Variant::Full;
  if (opt.variant == "derived") parsed.variant = Variant::Derived;
  return parsed;
}

std::string subset_text(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_indices(s)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

int run_classify(const Options& opt) {
  GcmInput input = load_input(opt);
  const Gcm& g = input.gcm;
  Subset all = (Subset(1) << g.n) - 1;
  SubsetClass cls = classify_subset(g, all);
  SphericalPoset poset = spherical_poset(g);
  CorePoset core = core_subposet(poset);

  Json out;
  out["n"] = g.n;
  out["symmetric"] = g.symmetric;
  out["indecomposable"] = g.indecomposable;
  out["corank"] = g.corank;
  out["classification"] = to_json(cls);
  out["poset"] = to_json(poset);
  out["core"] = to_json(core);
  bool two_level = true;
  try {
    IncidenceGraph graph = incidence_graph(poset);
    ForestDecomposition forest = spanning_forest_decomposition(graph);
    out["incidence_graph"] = to_json(graph, forest);
  } catch (const Error&) {
    two_level = false;
  }
  out["essentially_2_spherical"] = two_level;

  if (opt.json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "matrix: n=" << g.n << (g.symmetric ? ", symmetric" : ", not symmetric")
            << (g.indecomposable ? ", indecomposable" : ", decomposable")
            << ", corank " << g.corank << "\n";
  std::cout << "kind: " << subset_kind_name(cls.kind) << "\n";
  std::cout << "spherical poset: " << poset.elements.size() << " elements, " << poset.sphericity
            << "-spherical, maximal:";
  for (Subset s : poset.maximal) std::cout << " " << subset_text(s);
  std::cout << "\ncore: " << core.elements.size() << " elements, essentially "
            << core.essential_sphericity << "-spherical, initial " << subset_text(core.initial)
            << "\n";
  if (two_level) {
    IncidenceGraph graph = incidence_graph(poset);
    ForestDecomposition forest = spanning_forest_decomposition(graph);
    std::cout << "incidence graph: " << graph.vertices.size() << " vertices, "
              << graph.edges.size() << " edges, " << forest.unspanned.size()
              << " unspanned after the spanning forest\n";
  } else {
    std::cout << "incidence graph: not essentially 2-spherical\n";
  }
  return 0;
}

int run_lim(const Options& opt) {
  GcmInput input = load_input(opt);
  BKReport report = bk_cohomology(input.gcm, input.variant, opt.max_degree);
  if (opt.json) {
    std::cout << lim_table_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << "derived limits of the invariant diagram (rows: cohomological degree)\n";
  std::cout << "degree  lim0  lim1  lim2\n";
  for (int m = 0; m <= report.max_degree; m += 2)
    std::cout << m << "\t" << report.lim_dim(0, m) << "\t" << report.lim_dim(1, m) << "\t"
              << report.lim_dim(2, m) << "\n";
  return 0;
}

int run_cohomology(const Options& opt) {
  GcmInput input = load_input(opt);
  BKReport report = bk_cohomology(input.gcm, input.variant, opt.max_degree);
  if (opt.json) {
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << "H^m(BK, Q) dimensions, variant "
            << (report.variant == Variant::Full ? "full" : "derived") << ", torus rank "
            << report.torus_rank << "\n";
  std::cout << "m:";
  for (int m = 0; m <= report.max_degree; ++m) std::cout << " " << report.h_dims[m];
  std::cout << "\nnilpotent part (even degrees):";
  for (int m = 0; m <= report.max_degree; m += 2) std::cout << " " << report.nilpotent_dims[m];
  std::cout << "\n";
  if (report.lim0_series)
    std::cout << "lim0 series: " << report.lim0_series->to_string() << "\n";
  if (report.lim1_series)
    std::cout << "lim1 series: " << report.lim1_series->to_string() << "\n";
  std::cout << "lim2 vanishes through degree " << report.max_degree << ": "
            << (report.lim2_vanishes ? "yes" : "no") << "\n";
  if (!report.ring_note.empty()) std::cout << "note: " << report.ring_note << "\n";
  return 0;
}

TargetDegrees parse_target(const std::string& text, const GcmInput& input) {
  if (text.rfind("su:", 0) == 0) return su_target(std::stoi(text.substr(3)));
  if (text.rfind("degrees:", 0) == 0) {
    std::vector<int> degrees;
    std::stringstream ss(text.substr(8));
    std::string item;
    while (std::getline(ss, item, ',')) degrees.push_back(std::stoi(item));
    return user_target(degrees);
  }
  if (text == "table") return table_target(input.gcm, input.variant);
  throw Error(ErrorCode::BadInput, "target must be su:<n>, degrees:<list> or table");
}

int run_obstructions(const Options& opt) {
  GcmInput input = load_input(opt);
  TargetDegrees target = parse_target(opt.target, input);
  BKReport report = bk_cohomology(input.gcm, input.variant, opt.max_degree);
  ObstructionReport obs = obstruction_rank(report, target);
  if (opt.json) {
    std::cout << to_json(obs).dump(2) << "\n";
    return 0;
  }
  std::cout << "target degrees:";
  for (int d : target.degrees) std::cout << " " << d;
  if (target.degrees.empty()) std::cout << " (none)";
  std::cout << "\nobstruction rank per degree:";
  for (const auto& [nj, rank] : obs.per_degree) std::cout << " " << nj << ":" << rank;
  std::cout << "\nV-rank " << obs.v_rank << ", kernel rank " << obs.kernel_total << "\n";
  return 0;
}

int run_verify(const Options& opt) {
  GcmInput input = load_input(opt);
  std::vector<CheckResult> checks = run_verification(input.gcm, input.variant, opt.max_degree);
  bool all = true;
  for (const CheckResult& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.pass && !c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "all checks passed" : "verification failed") << "\n";
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of Kac-Moody classifying spaces"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_degree = true) {
    sub->add_option("input", opt.input, "GCM JSON file")->required();
    if (with_degree)
      sub->add_option("--max-degree", opt.max_degree, "top cohomological degree (default 20)");
    sub->add_option("--variant", opt.variant, "full|derived (overrides the input file)")
        ->check(CLI::IsMember({"full", "derived"}));
    sub->add_flag("--json", opt.json, "machine-readable output");
  };

  auto* classify = app.add_subcommand("classify", "matrix type, spherical poset, core, graph");
  add_common(classify, false);
  auto* lim = app.add_subcommand("lim", "derived-limit table of the invariant diagram");
  add_common(lim);
  auto* cohomology = app.add_subcommand("cohomology", "H*(BK, Q) dimensions and series");
  add_common(cohomology);
  auto* obstructions =
      app.add_subcommand("obstructions", "ranks of the torus-detection obstruction groups");
  add_common(obstructions);
  obstructions->add_option("--target", opt.target, "su:<n> | degrees:<list> | table")->required();
  auto* verify = app.add_subcommand("verify", "run the cross-check battery");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify)) return run_classify(opt);
    if (app.got_subcommand(lim)) return run_lim(opt);
    if (app.got_subcommand(cohomology)) return run_cohomology(opt);
    if (app.got_subcommand(obstructions)) return run_obstructions(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
  } catch (const kaclim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
