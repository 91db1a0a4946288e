#include "kaclim/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "kaclim/error.hpp"

namespace kaclim {

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < size(); ++j)
      if (less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < size(); ++j)
      if (less(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

int FinitePoset::max_chain_length() const {
  // Elements are in a linear extension, so one DP pass suffices.
  std::vector<int> height(size(), 0);
  int best = 0;
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < j; ++i)
      if (less(i, j)) {
        height[j] = std::max(height[j], height[i] + 1);
        best = std::max(best, height[j]);
      }
  return best;
}

std::vector<std::vector<std::vector<int>>> FinitePoset::chains() const {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  for (int i = 0; i < size(); ++i) current.push_back({i});
  while (!current.empty()) {
    out.push_back(current);
    std::vector<std::vector<int>> next;
    for (const auto& chain : current)
      for (int j = chain.back() + 1; j < size(); ++j)
        if (less(chain.back(), j)) {
          next.push_back(chain);
          next.back().push_back(j);
        }
    current = std::move(next);
  }
  return out;
}

int FinitePoset::initial_element() const {
  for (int i = 0; i < size(); ++i) {
    bool below_all = true;
    for (int j = 0; j < size(); ++j)
      if (!leq[i][j]) below_all = false;
    if (below_all) return i;
  }
  return -1;
}

FinitePoset FinitePoset::restrict(const std::vector<int>& elems) const {
  FinitePoset out;
  int m = int(elems.size());
  out.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.leq[i][j] = leq[elems[i]][elems[j]];
  return out;
}

bool subset_before(Subset a, Subset b) {
  int ca = subset_size(a), cb = subset_size(b);
  if (ca != cb) return ca < cb;
  return subset_lex_before(a, b);
}

bool subset_lex_before(Subset a, Subset b) {
  if (a == b) return false;
  while (a != 0 && b != 0) {
    int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

namespace {

int find_subset(const std::vector<Subset>& sorted_elems, Subset s) {
  auto it = std::lower_bound(sorted_elems.begin(), sorted_elems.end(), s, subset_before);
  if (it == sorted_elems.end() || *it != s) return -1;
  return int(it - sorted_elems.begin());
}

FinitePoset containment_poset(const std::vector<Subset>& elems) {
  FinitePoset p;
  int m = int(elems.size());
  p.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) p.leq[i][j] = (elems[i] & ~elems[j]) == 0;
  return p;
}

std::vector<Subset> maximal_of(const std::vector<Subset>& elems) {
  std::vector<Subset> out;
  for (Subset s : elems) {
    bool maximal = true;
    for (Subset t : elems)
      if (s != t && (s & ~t) == 0) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace

int SphericalPoset::index_of(Subset s) const { return find_subset(elements, s); }

FinitePoset SphericalPoset::finite_poset() const { return containment_poset(elements); }

SphericalPoset spherical_poset(const Gcm& gcm, int size_cap) {
  if (gcm.n > size_cap)
    throw Error(ErrorCode::SizeCapExceeded,
                "matrix size " + std::to_string(gcm.n) + " exceeds the subset enumeration cap " +
                    std::to_string(size_cap));
  SphericalPoset poset;
  poset.n = gcm.n;
  std::set<Subset> found{0u};
  // Upward breadth-first search; a set is tested only once all its facets
  // are known spherical, which the trichotomy makes a sound pruning.
  std::vector<Subset> frontier{0u};
  while (!frontier.empty()) {
    std::set<Subset> candidates;
    for (Subset s : frontier)
      for (int j = 0; j < gcm.n; ++j) {
        Subset t = s | (Subset(1) << j);
        if (t != s) candidates.insert(t);
      }
    frontier.clear();
    for (Subset t : candidates) {
      if (found.count(t)) continue;
      bool facets_ok = true;
      for (int j = 0; j < gcm.n && facets_ok; ++j)
        if (t & (Subset(1) << j)) facets_ok = found.count(t & ~(Subset(1) << j)) > 0;
      if (!facets_ok) continue;
      if (classify_subset(gcm, t).kind == SubsetKind::Finite) {
        found.insert(t);
        frontier.push_back(t);
      }
    }
  }
  poset.elements.assign(found.begin(), found.end());
  std::sort(poset.elements.begin(), poset.elements.end(), subset_before);
  poset.maximal = maximal_of(poset.elements);
  std::sort(poset.maximal.begin(), poset.maximal.end(), subset_before);
  poset.sphericity = 0;
  for (Subset s : poset.elements) poset.sphericity = std::max(poset.sphericity, subset_size(s));
  return poset;
}

int CorePoset::index_of(Subset s) const { return find_subset(elements, s); }

FinitePoset CorePoset::finite_poset() const { return containment_poset(elements); }

CorePoset core_subposet(const SphericalPoset& poset) {
  CorePoset core;
  core.maximal = poset.maximal;
  std::set<Subset> closure(poset.maximal.begin(), poset.maximal.end());
  for (;;) {
    std::set<Subset> next = closure;
    for (Subset s : closure)
      for (Subset t : closure) next.insert(s & t);
    if (next.size() == closure.size()) break;
    closure = std::move(next);
  }
  core.elements.assign(closure.begin(), closure.end());
  std::sort(core.elements.begin(), core.elements.end(), subset_before);
  core.initial = ~Subset(0);
  for (Subset s : core.maximal) core.initial &= s;
  core.essential_sphericity = core.finite_poset().max_chain_length();
  return core;
}

IncidenceGraph incidence_structure(FinitePoset poset, std::vector<Subset> labels) {
  IncidenceGraph g;
  g.initial = poset.initial_element();
  if (g.initial < 0)
    throw Error(ErrorCode::NotEssentially2Spherical, "poset has no initial element");

  std::vector<bool> is_vertex(poset.size(), false);
  std::vector<int> vertex_pos(poset.size(), -1);
  for (int i = 0; i < poset.size(); ++i) {
    if (i == g.initial) continue;
    bool minimal = true;
    for (int j = 0; j < poset.size(); ++j)
      if (j != g.initial && poset.less(j, i)) minimal = false;
    if (minimal) is_vertex[i] = true;
  }
  // Canonical vertex order: label order when labelled, index order otherwise.
  for (int i = 0; i < poset.size(); ++i)
    if (is_vertex[i]) g.vertices.push_back(i);
  if (!labels.empty())
    std::sort(g.vertices.begin(), g.vertices.end(),
              [&](int a, int b) { return subset_lex_before(labels[a], labels[b]); });
  for (int k = 0; k < int(g.vertices.size()); ++k) vertex_pos[g.vertices[k]] = k;

  std::vector<int> edge_elems;
  for (int i = 0; i < poset.size(); ++i)
    if (i != g.initial && !is_vertex[i]) edge_elems.push_back(i);
  if (!labels.empty())
    std::sort(edge_elems.begin(), edge_elems.end(),
              [&](int a, int b) { return subset_lex_before(labels[a], labels[b]); });
  for (int e : edge_elems) {
    std::vector<int> ends;
    for (int j = 0; j < poset.size(); ++j)
      if (j != g.initial && poset.less(j, e)) {
        if (!is_vertex[j])
          throw Error(ErrorCode::NotEssentially2Spherical, "chains of length greater than 2");
        ends.push_back(vertex_pos[j]);
      }
    if (ends.size() != 2)
      throw Error(ErrorCode::NotEssentially2Spherical,
                  "a maximal element covers " + std::to_string(ends.size()) + " vertices");
    std::sort(ends.begin(), ends.end());
    g.edges.push_back({e, ends[0], ends[1]});
  }
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j)
      if (g.edges[i].a == g.edges[j].a && g.edges[i].b == g.edges[j].b)
        throw Error(ErrorCode::NotEssentially2Spherical, "repeated edge");
  g.poset = std::move(poset);
  g.labels = std::move(labels);
  return g;
}

IncidenceGraph incidence_graph(const SphericalPoset& poset) {
  if (poset.sphericity <= 2) {
    IncidenceGraph g = incidence_structure(poset.finite_poset(), poset.elements);
    g.over_core = false;
    return g;
  }
  CorePoset core = core_subposet(poset);
  if (core.essential_sphericity > 2)
    throw Error(ErrorCode::NotEssentially2Spherical,
                "essential sphericity " + std::to_string(core.essential_sphericity));
  IncidenceGraph g = incidence_structure(core.finite_poset(), core.elements);
  g.over_core = true;
  return g;
}

ForestDecomposition spanning_forest_decomposition(const IncidenceGraph& graph) {
  int nv = int(graph.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // vertex -> (neighbor, edge id)
  for (int e = 0; e < int(graph.edges.size()); ++e) {
    adj[graph.edges[e].a].emplace_back(graph.edges[e].b, e);
    adj[graph.edges[e].b].emplace_back(graph.edges[e].a, e);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  ForestDecomposition out;
  std::vector<int> parent_edge(nv, -1), parent_vertex(nv, -1), depth(nv, 0);
  std::vector<bool> visited(nv, false);
  std::vector<bool> in_forest(graph.edges.size(), false);
  for (int root = 0; root < nv; ++root) {
    if (visited[root]) continue;
    std::queue<int> queue;
    queue.push(root);
    visited[root] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (auto [w, e] : adj[v])
        if (!visited[w]) {
          visited[w] = true;
          parent_edge[w] = e;
          parent_vertex[w] = v;
          depth[w] = depth[v] + 1;
          in_forest[e] = true;
          queue.push(w);
        }
    }
  }
  for (int e = 0; e < int(graph.edges.size()); ++e)
    (in_forest[e] ? out.forest_edges : out.unspanned).push_back(e);

  for (int e : out.unspanned) {
    ForestDecomposition::Cycle cycle;
    cycle.edge = e;
    // Unique forest path between the endpoints: climb to the common ancestor.
    int a = graph.edges[e].a, b = graph.edges[e].b;
    std::vector<int> left{a}, right{b};
    std::vector<int> left_edges, right_edges;
    int x = a, y = b;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        left_edges.push_back(parent_edge[x]);
        x = parent_vertex[x];
        left.push_back(x);
      } else {
        right_edges.push_back(parent_edge[y]);
        y = parent_vertex[y];
        right.push_back(y);
      }
    }
    cycle.path_vertices = left;
    cycle.path_vertices.insert(cycle.path_vertices.end(), right.rbegin() + 1, right.rend());
    cycle.path_edges = left_edges;
    cycle.path_edges.insert(cycle.path_edges.end(), right_edges.rbegin(), right_edges.rend());
    if (cycle.path_edges.size() < 2)
      throw Error(ErrorCode::Internal, "unspanned edge parallel to a forest edge");

    cycle.subposet.push_back(graph.initial);
    for (int v : cycle.path_vertices) cycle.subposet.push_back(graph.vertices[v]);
    for (int f : cycle.path_edges) cycle.subposet.push_back(graph.edges[f].element);
    cycle.subposet.push_back(graph.edges[e].element);
    std::sort(cycle.subposet.begin(), cycle.subposet.end());
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace kaclim
