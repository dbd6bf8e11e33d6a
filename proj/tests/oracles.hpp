#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into refinement, Schreier-Sims or the group-automorphism enumerator.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "semicayley/semicayley.hpp"

namespace oracle {

using semicayley::Graph;

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix adjacency(const Graph& g) {
  AdjMatrix m(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline bool preserves(const AdjMatrix& a, const AdjMatrix& b, const std::vector<int>& p) {
  const std::size_t n = a.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (a[u][v] != b[p[u]][p[v]]) return false;
    }
  }
  return true;
}

/// All automorphisms by trying every vertex permutation.
inline std::vector<std::vector<int>> brute_automorphisms(const Graph& g) {
  const AdjMatrix m = adjacency(g);
  std::vector<int> p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (preserves(m, m, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::size_t brute_aut_order(const Graph& g) { return brute_automorphisms(g).size(); }

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const AdjMatrix ma = adjacency(a), mb = adjacency(b);
  std::vector<int> p(a.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (preserves(ma, mb, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Backtracking automorphism counter that extends a partial map vertex by
/// vertex, checking adjacency against all previously mapped vertices.
inline std::size_t backtrack_aut_order(const Graph& g) {
  const AdjMatrix m = adjacency(g);
  const std::size_t n = m.size();
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::size_t count = 0;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != g.degree(w)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = m[u][v] == m[image[u]][w];
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
  };
  rec(rec, 0);
  return count;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<semicayley::Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({static_cast<semicayley::Vertex>(u), static_cast<semicayley::Vertex>(v)});
    }
  }
  return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& p) {
  std::vector<semicayley::Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.push_back({static_cast<semicayley::Vertex>(p[u]), static_cast<semicayley::Vertex>(p[v])});
  }
  return Graph(g.vertex_count(), edges);
}

/// Group automorphisms of Z_{n1} x ... x Z_{nr}, found by trying every tuple of
/// generator images and keeping those that extend to a bijective homomorphism.
/// Elements are coordinate vectors; the result is the list of full index maps.
inline std::vector<std::vector<std::size_t>> brute_group_automorphisms(const std::vector<int>& factors) {
  std::size_t order = 1;
  for (int f : factors) order *= static_cast<std::size_t>(f);
  const std::size_t r = factors.size();
  auto coords = [&](std::size_t idx) {
    std::vector<int> c(r);
    for (std::size_t i = r; i-- > 0;) {
      c[i] = static_cast<int>(idx % factors[i]);
      idx /= factors[i];
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < r; ++i) idx = idx * factors[i] + static_cast<std::size_t>(((c[i] % factors[i]) + factors[i]) % factors[i]);
    return idx;
  };
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> gens(r, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == r) {
      // Image of x = sum x_i * img(e_i). Well-defined iff n_i * img(e_i) = 0.
      for (std::size_t j = 0; j < r; ++j) {
        const auto c = coords(gens[j]);
        for (std::size_t t = 0; t < r; ++t) {
          if ((static_cast<long>(c[t]) * factors[j]) % factors[t] != 0) return;
        }
      }
      std::vector<std::size_t> map(order);
      std::vector<bool> hit(order, false);
      for (std::size_t x = 0; x < order; ++x) {
        const auto xc = coords(x);
        std::vector<int> img(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          const auto gc = coords(gens[j]);
          for (std::size_t t = 0; t < r; ++t) img[t] += xc[j] * gc[t];
        }
        map[x] = index(img);
        if (hit[map[x]]) return;
        hit[map[x]] = true;
      }
      out.push_back(std::move(map));
      return;
    }
    for (std::size_t y = 0; y < order; ++y) {
      gens[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

/// Number of partitions of n by the standard coin-change recurrence.
inline std::size_t partition_count(int n) {
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  }
  return p[n];
}

/// Colour-preservation check written directly from the definition, on
/// coordinate vectors rather than element indices.
inline bool colour_preserving(const semicayley::AbelianGroup& g, const std::vector<semicayley::Element>& colours,
                              const std::vector<std::size_t>& sigma) {
  const auto elems = g.elements();
  auto img = [&](const semicayley::Element& x) { return elems[sigma[g.index_of(x)]]; };
  for (const auto& x : elems) {
    for (const auto& s : colours) {
      const auto lhs = img(g.add(x, s));
      if (lhs != g.add(img(x), s) && lhs != g.sub(img(x), s)) return false;
    }
  }
  return true;
}

/// Normality of R_G in Aut(SC) by listing the whole automorphism group (small
/// graphs only) and conjugating each translation.
inline bool brute_normal(const semicayley::ConnectionSpec& spec) {
  const Graph g = semicayley::build_sc_graph(spec);
  const auto& grp = spec.group();
  const std::size_t n = grp.order();
  std::set<std::vector<int>> translations;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<int> p(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
      p[x] = static_cast<int>(grp.add_index(x, t));
      p[n + x] = static_cast<int>(n + grp.add_index(x, t));
    }
    translations.insert(p);
  }
  for (const auto& a : brute_automorphisms(g)) {
    std::vector<int> inv(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<int>(i);
    for (const auto& t : translations) {
      std::vector<int> c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[t[inv[i]]];
      if (!translations.count(c)) return false;
    }
  }
  return true;
}

/// Every inverse-closed subset of G without 0, as sorted element lists.
inline std::vector<std::vector<semicayley::Element>> inverse_closed_subsets(const semicayley::AbelianGroup& g) {
  const auto elems = g.elements();
  std::vector<std::vector<semicayley::Element>> blocks;
  std::set<std::size_t> seen;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (seen.count(i)) continue;
    const std::size_t j = g.neg_index(i);
    seen.insert(i);
    seen.insert(j);
    blocks.push_back(i == j ? std::vector{elems[i]} : std::vector{elems[i], elems[j]});
  }
  std::vector<std::vector<semicayley::Element>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << blocks.size()); ++mask) {
    std::vector<semicayley::Element> s;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (mask >> b & 1) s.insert(s.end(), blocks[b].begin(), blocks[b].end());
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace oracle
