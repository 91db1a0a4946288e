#include "kaclim/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "kaclim/error.hpp"
#include "kaclim/invariants.hpp"

namespace kaclim {

Realization realization(const Gcm& gcm, Variant variant) {
  Realization out;
  out.variant = variant;
  const int n = gcm.n;
  // Full torus rank is 2n - rank(A) = n + corank; the Weyl group acts through
  // the derived factor, the remaining corank coordinates are a split central
  // torus it fixes. For nonsingular A the two variants coincide.
  out.rank = (variant == Variant::Derived) ? n : 2 * n - (n - gcm.corank);
  const int r = out.rank;
  for (int i = 0; i < n; ++i) {
    // Dual of s_i(e_j) = e_j - a_ji e_i on the coroot basis: the identity
    // except in column i, which picks up the simple-root coordinates.
    Mat s = Mat::identity(r);
    for (int k = 0; k < n; ++k) s(k, i) -= gcm.a[k][i];
    out.generators.push_back(std::move(s));
  }
  for (const Mat& s : out.generators)
    if (!is_reflection(s)) throw Error(ErrorCode::Internal, "generator is not a reflection");
  return out;
}

namespace {

struct TypeData {
  std::string label;
  std::vector<int> degrees;
};

TypeData recognize_component(const std::vector<int>& verts,
                             const std::vector<std::vector<int>>& labels) {
  const int k = int(verts.size());
  auto fail = [&] {
    return Error(ErrorCode::NotSpherical, "unrecognized Coxeter component");
  };
  if (k == 1) return {"A1", {2}};
  if (k == 2) {
    int m = labels[verts[0]][verts[1]];
    if (m == 3) return {"A2", {2, 3}};
    if (m == 4) return {"B2", {2, 4}};
    if (m == 6) return {"I2(6)", {2, 6}};
    throw fail();
  }
  // Rank three and up: a tree with bonds 3 and 4 only.
  std::vector<std::pair<int, int>> edges;
  int bond4 = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int m = labels[verts[i]][verts[j]];
      if (m == 2) continue;
      if (m != 3 && m != 4) throw fail();
      if (m == 4) ++bond4;
      edges.emplace_back(i, j);
    }
  if (int(edges.size()) != k - 1 || bond4 > 1) throw fail();
  std::vector<int> deg(k, 0);
  for (auto [i, j] : edges) ++deg[i], ++deg[j];
  int branch = -1;
  for (int i = 0; i < k; ++i) {
    if (deg[i] > 3) throw fail();
    if (deg[i] == 3) {
      if (branch >= 0) throw fail();
      branch = i;
    }
  }

  auto path_degrees = [&](int count) {
    std::vector<int> d(count);
    std::iota(d.begin(), d.end(), 2);
    return d;
  };
  if (bond4 == 1) {
    if (branch >= 0) throw fail();
    // The strong bond sits at an end of the path for B, in the middle for F4.
    int e4 = -1;
    for (int e = 0; e < int(edges.size()); ++e)
      if (labels[verts[edges[e].first]][verts[edges[e].second]] == 4) e4 = e;
    auto [x, y] = edges[e4];
    bool at_end = deg[x] == 1 || deg[y] == 1;
    if (at_end) {
      std::vector<int> d(k);
      for (int i = 0; i < k; ++i) d[i] = 2 * (i + 1);
      return {"B" + std::to_string(k), d};
    }
    if (k == 4) return {"F4", {2, 6, 8, 12}};
    throw fail();
  }
  if (branch < 0) return {"A" + std::to_string(k), path_degrees(k)};

  // Branch lengths from the fork, sorted.
  std::vector<std::vector<int>> adj(k);
  for (auto [i, j] : edges) adj[i].push_back(j), adj[j].push_back(i);
  std::vector<int> lengths;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (deg[cur] == 2) {
      for (int next : adj[cur])
        if (next != prev) {
          prev = cur;
          cur = next;
          break;
        }
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  if (lengths[0] == 1 && lengths[1] == 1) {
    std::vector<int> d;
    for (int i = 1; i < k; ++i) d.push_back(2 * i);
    d.push_back(k);
    std::sort(d.begin(), d.end());
    return {"D" + std::to_string(k), d};
  }
  if (lengths == std::vector<int>{1, 2, 2}) return {"E6", {2, 5, 6, 8, 9, 12}};
  if (lengths == std::vector<int>{1, 2, 3}) return {"E7", {2, 6, 8, 10, 12, 14, 18}};
  if (lengths == std::vector<int>{1, 2, 4}) return {"E8", {2, 8, 12, 14, 18, 20, 24, 30}};
  throw fail();
}

}  // namespace

CoxeterTypeReport coxeter_components(const Gcm& gcm, Subset subset) {
  if (classify_subset(gcm, subset).kind != SubsetKind::Finite)
    throw Error(ErrorCode::NotSpherical, "subset is not spherical");
  CoxeterTypeReport report;
  auto labels = coxeter_labels(gcm);
  // Components of the Coxeter graph (bond order at least 3).
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
        if (!used[w] && labels[idx[v]][idx[w]] >= 3) {
          used[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    TypeData type = recognize_component(comp, labels);
    report.components.push_back({type.label, comp, type.degrees});
  }
  std::sort(report.components.begin(), report.components.end(),
            [](const CoxeterComponent& a, const CoxeterComponent& b) {
              return a.vertices < b.vertices;
            });
  for (const auto& comp : report.components)
    report.degrees.insert(report.degrees.end(), comp.degrees.begin(), comp.degrees.end());
  std::sort(report.degrees.begin(), report.degrees.end());
  for (int d : report.degrees) report.order *= (unsigned long long)d;
  return report;
}

PoincareSeries invariant_series(const CoxeterTypeReport& report, int torus_rank) {
  int size = int(report.degrees.size());
  if (size > torus_rank)
    throw Error(ErrorCode::AmbientMismatch, "subset larger than the torus rank");
  std::vector<int> factors;
  for (int d : report.degrees) factors.push_back(2 * d);
  for (int i = size; i < torus_rank; ++i) factors.push_back(2);
  return PoincareSeries::one_over(std::move(factors));
}

}  // namespace kaclim
