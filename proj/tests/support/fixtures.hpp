#ifndef KACLIM_TESTS_FIXTURES_HPP
#define KACLIM_TESTS_FIXTURES_HPP

#include <random>
#include <set>
#include <vector>

#include "kaclim/gcm.hpp"
#include "kaclim/holim.hpp"
#include "kaclim/invariants.hpp"
#include "kaclim/matrix.hpp"
#include "kaclim/poset.hpp"

namespace kaclim::tests {

// The three running examples: an affine symmetric matrix, an indefinite
// matrix with no spherical pairs, and an indefinite one with all pairs
// spherical.
inline Gcm affine3() { return make_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }
inline Gcm one_spherical3() { return make_gcm({{2, -1, -1}, {-7, 2, -1}, {-8, -9, 2}}); }
inline Gcm two_spherical3() { return make_gcm({{2, -1, -1}, {-1, 2, -1}, {-2, -3, 2}}); }

// Brute-force enumeration of the group generated by a few matrices; the
// independent oracle for Coxeter orders. Returns 0 past the cap.
inline long group_order(const std::vector<Mat>& gens, long cap) {
  if (gens.empty()) return 1;
  std::vector<Mat> elements{Mat::identity(gens.front().rows())};
  std::vector<Mat> frontier = elements;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& w : frontier)
      for (const Mat& g : gens) {
        Mat c = w * g;
        bool seen = false;
        for (const Mat& e : elements)
          if (e == c) {
            seen = true;
            break;
          }
        if (!seen) {
          elements.push_back(c);
          next.push_back(c);
          if (long(elements.size()) > cap) return 0;
        }
      }
    frontier = std::move(next);
  }
  return long(elements.size());
}

// Random GCM with entries drawn from a small pool; used for exhaustive-ish
// property checks at n <= 4.
inline Gcm random_gcm(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(0, 4);
  for (;;) {
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int x = entry(rng), y = entry(rng);
        if (x == 0 || y == 0) x = y = 0;
        a[i][j] = -x;
        a[j][i] = -y;
      }
    try {
      return make_gcm(std::move(a));
    } catch (...) {
    }
  }
}

// Random indecomposable nonsingular 2-spherical GCM with at least one
// spherical pair.
inline Gcm random_two_spherical_gcm(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 99);
  const std::vector<std::pair<int, int>> spherical_pool{
      {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};
  const std::vector<std::pair<int, int>> other_pool{
      {0, 0}, {1, 4}, {4, 1}, {2, 2}, {2, 3}, {3, 2}, {1, 5}, {5, 1}};
  for (;;) {
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool spherical = pick(rng) < 65;
        auto [x, y] = spherical
                          ? spherical_pool[pick(rng) % spherical_pool.size()]
                          : other_pool[pick(rng) % other_pool.size()];
        a[i][j] = -x;
        a[j][i] = -y;
      }
    Gcm g;
    try {
      g = make_gcm(std::move(a));
    } catch (...) {
      continue;
    }
    if (!g.indecomposable || g.corank != 0) continue;
    SphericalPoset poset = spherical_poset(g);
    if (poset.sphericity != 2) continue;
    return g;
  }
}

// Random subspace of `inside` with roughly the requested dimension.
inline Subspace random_subspace(std::mt19937& rng, const Subspace& inside, int want_dim) {
  std::uniform_int_distribution<int> entry(-2, 2);
  if (inside.dim() == 0 || want_dim == 0) return Subspace::zero(inside.ambient);
  Mat coeffs(inside.dim(), want_dim);
  for (int i = 0; i < inside.dim(); ++i)
    for (int j = 0; j < want_dim; ++j) coeffs(i, j) = entry(rng);
  return Subspace::from_span(inside.ambient, inside.basis * coeffs);
}

// Exact intersection of two subspaces of a common ambient space.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient);
  Mat stacked(a.ambient, a.dim() + b.dim());
  for (int i = 0; i < a.ambient; ++i) {
    for (int j = 0; j < a.dim(); ++j) stacked(i, j) = a.basis(i, j);
    for (int j = 0; j < b.dim(); ++j) stacked(i, a.dim() + j) = -b.basis(i, j);
  }
  Mat kernel = nullspace(stacked);
  Mat head(a.dim(), kernel.cols());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < kernel.cols(); ++j) head(i, j) = kernel(i, j);
  return Subspace::from_span(a.ambient, a.basis * head);
}

// Two-level poset of a cycle with n vertices: initial, vertices, edges.
inline FinitePoset cycle_poset(int n) {
  int size = 1 + 2 * n;
  FinitePoset p;
  p.leq.assign(size, std::vector<bool>(size, false));
  for (int i = 0; i < size; ++i) p.leq[i][i] = true;
  for (int j = 1; j < size; ++j) p.leq[0][j] = true;
  for (int e = 0; e < n; ++e) {
    p.leq[1 + e][1 + n + e] = true;
    p.leq[1 + (e + 1) % n][1 + n + e] = true;
  }
  return p;
}

// Two-level poset of the complete graph on four vertices.
inline FinitePoset k4_poset() {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int size = 1 + 4 + int(edges.size());
  FinitePoset p;
  p.leq.assign(size, std::vector<bool>(size, false));
  for (int i = 0; i < size; ++i) p.leq[i][i] = true;
  for (int j = 1; j < size; ++j) p.leq[0][j] = true;
  for (int e = 0; e < int(edges.size()); ++e) {
    p.leq[1 + edges[e].first][5 + e] = true;
    p.leq[1 + edges[e].second][5 + e] = true;
  }
  return p;
}

// Random monotone diagram over a two-level poset: vertex spaces inside the
// initial space, edge spaces inside the intersection of their endpoints.
inline DiagramSlice random_two_level_slice(std::mt19937& rng, const FinitePoset& poset,
                                           int ambient) {
  std::uniform_int_distribution<int> dim_pick(0, ambient);
  DiagramSlice slice;
  slice.poset = poset;
  slice.ambient = ambient;
  slice.spaces.assign(poset.size(), Subspace::zero(ambient));
  Subspace init = random_subspace(rng, Subspace::full(ambient),
                                  std::max(1, dim_pick(rng)));
  slice.spaces[0] = init;
  std::vector<int> verts, edges;
  for (int i = 1; i < poset.size(); ++i) {
    bool minimal = true;
    for (int j = 1; j < poset.size(); ++j)
      if (poset.less(j, i)) minimal = false;
    (minimal ? verts : edges).push_back(i);
  }
  for (int v : verts) slice.spaces[v] = random_subspace(rng, init, dim_pick(rng) % (ambient / 2 + 1));
  for (int e : edges) {
    Subspace meet = init;
    for (int v : verts)
      if (poset.less(v, e)) meet = intersect(meet, slice.spaces[v]);
    slice.spaces[e] = random_subspace(rng, meet, dim_pick(rng) % (meet.dim() + 1));
  }
  return slice;
}

}  // namespace kaclim::tests

#endif
