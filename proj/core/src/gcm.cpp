#include "kaclim/gcm.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "kaclim/error.hpp"
#include "kaclim/matrix.hpp"

namespace kaclim {

const char* subset_kind_name(SubsetKind kind) {
  switch (kind) {
    case SubsetKind::Finite: return "finite";
    case SubsetKind::Affine: return "affine";
    case SubsetKind::Indefinite: return "indefinite";
  }
  return "?";
}

int subset_size(Subset s) { return __builtin_popcount(s); }

std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

Gcm make_gcm(std::vector<std::vector<long>> entries) {
  Gcm g;
  g.n = int(entries.size());
  if (g.n == 0) throw Error(ErrorCode::NotSquare, "empty matrix");
  for (const auto& row : entries)
    if (int(row.size()) != g.n) throw Error(ErrorCode::NotSquare, "matrix is not square");
  for (int i = 0; i < g.n; ++i) {
    if (entries[i][i] != 2) throw Error(ErrorCode::DiagonalNotTwo, "a[" + std::to_string(i + 1) + "][" + std::to_string(i + 1) + "] != 2");
    for (int j = 0; j < g.n; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0)
        throw Error(ErrorCode::PositiveOffDiagonal,
                    "a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] > 0");
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw Error(ErrorCode::ZeroAsymmetry,
                    "a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = 0 but the mirror entry is not");
    }
  }
  g.a = std::move(entries);

  g.symmetric = true;
  for (int i = 0; i < g.n && g.symmetric; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.a[i][j] != g.a[j][i]) {
        g.symmetric = false;
        break;
      }

  // Connectivity of the off-diagonal zero pattern.
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.n; ++w)
      if (!seen[w] && g.a[v][w] != 0) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  g.indecomposable = true;
  for (bool b : seen) g.indecomposable = g.indecomposable && b;

  Mat m(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) m(i, j) = g.a[i][j];
  g.corank = g.n - rank_of(m);
  return g;
}

GcmInput parse_gcm(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix"))
    throw Error(ErrorCode::BadInput, "expected an object with a \"matrix\" key");
  const auto& m = doc["matrix"];
  if (!m.is_array()) throw Error(ErrorCode::NotSquare, "\"matrix\" must be an array of arrays");
  std::vector<std::vector<long>> entries;
  for (const auto& row : m) {
    if (!row.is_array()) throw Error(ErrorCode::NotSquare, "\"matrix\" must be an array of arrays");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorCode::BadInput, "matrix entries must be integers");
      r.push_back(v.get<long>());
    }
    entries.push_back(std::move(r));
  }
  GcmInput input;
  input.gcm = make_gcm(std::move(entries));
  if (doc.contains("variant")) {
    std::string v = doc["variant"].get<std::string>();
    if (v == "full")
      input.variant = Variant::Full;
    else if (v == "derived")
      input.variant = Variant::Derived;
    else
      throw Error(ErrorCode::BadInput, "variant must be \"full\" or \"derived\"");
  }
  return input;
}

namespace {

Int principal_minor(const Gcm& g, const std::vector<int>& idx) {
  std::vector<std::vector<Int>> m(idx.size(), std::vector<Int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) m[i][j] = g.a[idx[i]][idx[j]];
  return bareiss_det(std::move(m));
}

SubsetKind classify_component(const Gcm& g, const std::vector<int>& verts) {
  // All principal minors of the component, exact over the integers.
  int k = int(verts.size());
  bool proper_positive = true;
  for (Subset sub = 1; sub + 1 < (Subset(1) << k); ++sub) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      if (sub & (Subset(1) << i)) idx.push_back(verts[i]);
    if (principal_minor(g, idx) <= 0) {
      proper_positive = false;
      break;
    }
  }
  Int full = principal_minor(g, verts);
  if (proper_positive && full > 0) return SubsetKind::Finite;
  if (proper_positive && full == 0) return SubsetKind::Affine;
  return SubsetKind::Indefinite;
}

}  // namespace

SubsetClass classify_subset(const Gcm& gcm, Subset subset) {
  SubsetClass out;
  std::vector<int> idx = subset_indices(subset);
  std::vector<bool> used(idx.size(), false);
  for (size_t start = 0; start < idx.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> comp;
    std::vector<size_t> stack{start};
    used[start] = true;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      comp.push_back(idx[v]);
      for (size_t w = 0; w < idx.size(); ++w)
        if (!used[w] && gcm.a[idx[v]][idx[w]] != 0) {
          used[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back({comp, classify_component(gcm, comp)});
  }
  bool any_affine = false, any_indefinite = false;
  for (const auto& c : out.components) {
    any_affine = any_affine || c.kind == SubsetKind::Affine;
    any_indefinite = any_indefinite || c.kind == SubsetKind::Indefinite;
  }
  out.kind = any_indefinite ? SubsetKind::Indefinite
             : any_affine   ? SubsetKind::Affine
                            : SubsetKind::Finite;
  return out;
}

int bond_order(long product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return kInfiniteBond;
  }
}

std::vector<std::vector<int>> coxeter_labels(const Gcm& gcm) {
  std::vector<std::vector<int>> m(gcm.n, std::vector<int>(gcm.n, 1));
  for (int i = 0; i < gcm.n; ++i)
    for (int j = 0; j < gcm.n; ++j)
      if (i != j) m[i][j] = bond_order(gcm.a[i][j] * gcm.a[j][i]);
  return m;
}

}  // namespace kaclim
