#pragma once

// Automorphism groups of small graphs by individualization-refinement.
//
// The search follows the usual scheme: refine the unit partition to the
// coarsest equitable partition, then repeatedly individualize the first vertex
// of the first non-singleton cell until the partition is discrete. That
// leftmost path fixes a reference leaf. Walking back up the path, every other
// vertex w of a node's target cell is tried (skipping vertices already in the
// orbit of a tried one under the automorphisms found so far); the subtree under
// w is searched for a leaf whose relabelling of the reference leaf is an
// automorphism. One automorphism per (level, orbit) is kept, and together these
// generate Aut(G).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicayley/errors.hpp"
#include "semicayley/graph.hpp"
#include "semicayley/perm_group.hpp"
#include "semicayley/permutation.hpp"

namespace semicayley {

inline constexpr std::size_t kDefaultMaxVertices = 64;

/// Vertex cap for the search; SEMICAYLEY_MAX_VERTICES overrides the default.
inline std::size_t max_search_vertices() {
  if (const char* env = std::getenv("SEMICAYLEY_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxVertices;
}

/// Ordered partition of the vertex set.
class ColoredPartition {
 public:
  ColoredPartition() = default;

  static ColoredPartition unit(std::size_t n) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return ColoredPartition(n, n ? std::vector<std::vector<Vertex>>{all} : std::vector<std::vector<Vertex>>{});
  }

  ColoredPartition(std::size_t n, std::vector<std::vector<Vertex>> cells) : cells_(std::move(cells)), cell_of_(n, npos) {
    std::size_t covered = 0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (cells_[c].empty()) throw InvalidArgumentError("empty cell");
      for (Vertex v : cells_[c]) {
        if (v >= n || cell_of_[v] != npos) throw InvalidArgumentError("cells are not a partition");
        cell_of_[v] = c;
        ++covered;
      }
    }
    if (covered != n) throw InvalidArgumentError("cells do not cover every vertex");
  }

  const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::size_t cell_of(Vertex v) const { return cell_of_.at(v); }
  bool is_discrete() const noexcept { return cells_.size() == cell_of_.size(); }

  /// Index of the first cell with more than one vertex, or cell_count().
  std::size_t first_nonsingleton() const noexcept {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (cells_[c].size() > 1) return c;
    }
    return cells_.size();
  }

  /// Splits {v} off the front of its cell.
  ColoredPartition individualize(Vertex v) const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(cells_.size() + 1);
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (c == cell_of_.at(v) && cells_[c].size() > 1) {
        out.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells_[c]) {
          if (w != v) rest.push_back(w);
        }
        out.push_back(std::move(rest));
      } else {
        out.push_back(cells_[c]);
      }
    }
    return ColoredPartition(cell_of_.size(), std::move(out));
  }

  /// Vertices in cell order; for a discrete partition this is the leaf labelling.
  std::vector<Vertex> flatten() const {
    std::vector<Vertex> out;
    for (const auto& c : cells_) out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  bool is_equitable(const Graph& g) const {
    for (const auto& cell : cells_) {
      std::vector<std::size_t> first;
      for (std::size_t k = 0; k < cell.size(); ++k) {
        std::vector<std::size_t> counts(cells_.size(), 0);
        for (Vertex w : g.neighbors(cell[k])) ++counts[cell_of_[w]];
        if (k == 0) {
          first = std::move(counts);
        } else if (counts != first) {
          return false;
        }
      }
    }
    return true;
  }

  /// Cell sizes plus the cell-to-cell neighbour counts. Invariant under
  /// isomorphism for equitable partitions.
  std::vector<std::size_t> quotient_invariant(const Graph& g) const {
    std::vector<std::size_t> out;
    out.reserve(cells_.size() * (cells_.size() + 1));
    for (const auto& cell : cells_) out.push_back(cell.size());
    for (const auto& cell : cells_) {
      std::vector<std::size_t> counts(cells_.size(), 0);
      for (Vertex w : g.neighbors(cell.front())) ++counts[cell_of_[w]];
      out.insert(out.end(), counts.begin(), counts.end());
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::vector<Vertex>> cells_;
  std::vector<std::size_t> cell_of_;
};

/// Coarsest equitable refinement of `pi`. Each round replaces every cell by its
/// sub-cells of equal neighbour-count signature, sub-cells in increasing
/// signature order, until nothing splits.
inline ColoredPartition refine(const Graph& g, const ColoredPartition& pi) {
  std::vector<std::vector<Vertex>> cells = pi.cells();
  std::vector<std::size_t> cell_of(g.vertex_count());
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) cell_of[v] = c;
    }
    std::vector<std::vector<Vertex>> next;
    next.reserve(g.vertex_count());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::size_t>, std::vector<Vertex>> groups;
      for (Vertex v : cell) {
        std::vector<std::size_t> sig(cells.size(), 0);
        for (Vertex w : g.neighbors(v)) ++sig[cell_of[w]];
        groups[std::move(sig)].push_back(v);
      }
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    const bool split = next.size() != cells.size();
    cells = std::move(next);
    if (!split) break;
  }
  return ColoredPartition(g.vertex_count(), std::move(cells));
}

namespace detail {

struct PathNode {
  ColoredPartition partition;  // refined partition at this node
  std::vector<std::size_t> invariant;
  Vertex chosen = 0;  // vertex individualized on the reference path
};

/// Leftmost path of the search tree: nodes[0] is the refined root, the last node is discrete.
inline std::vector<PathNode> reference_path(const Graph& g, const ColoredPartition& start) {
  std::vector<PathNode> path;
  ColoredPartition pi = refine(g, start);
  while (true) {
    PathNode node{pi, pi.quotient_invariant(g), 0};
    if (pi.is_discrete()) {
      path.push_back(std::move(node));
      break;
    }
    node.chosen = pi.cells()[pi.first_nonsingleton()].front();
    path.push_back(node);
    pi = refine(g, pi.individualize(node.chosen));
  }
  return path;
}

/// Union-find over vertices, merged by the automorphisms found so far.
class OrbitTracker {
 public:
  explicit OrbitTracker(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void absorb(const Permutation& p) {
    for (Vertex v = 0; v < parent_.size(); ++v) {
      const Vertex a = find(v), b = find(p[v]);
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<Vertex> parent_;
};

/// Searches the subtree rooted at `pi` (depth `depth`) of graph `target` for a
/// leaf whose correspondence with the reference leaf of `source` is an
/// isomorphism source -> target. Nodes whose invariant differs from the
/// reference path at the same depth are cut.
inline std::optional<Permutation> match_subtree(const Graph& source, const std::vector<PathNode>& path,
                                                const Graph& target, const ColoredPartition& pi, std::size_t depth) {
  if (depth >= path.size() || pi.quotient_invariant(target) != path[depth].invariant) return std::nullopt;
  if (pi.is_discrete()) {
    const auto ref = path.back().partition.flatten();
    const auto leaf = pi.flatten();
    std::vector<Point> images(ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) images[ref[i]] = leaf[i];
    Permutation map(std::move(images));
    for (auto [u, v] : source.edges()) {
      if (!target.adjacent(map[u], map[v])) return std::nullopt;
    }
    return map;
  }
  const auto& cell = pi.cells()[pi.first_nonsingleton()];
  for (Vertex w : cell) {
    if (auto found = match_subtree(source, path, target, refine(target, pi.individualize(w)), depth + 1)) return found;
  }
  return std::nullopt;
}

inline void check_cap(const Graph& g) {
  const std::size_t cap = max_search_vertices();
  if (g.vertex_count() > cap) {
    throw ResourceLimitError("graph on " + std::to_string(g.vertex_count()) + " vertices exceeds the search cap of " +
                             std::to_string(cap));
  }
}

}  // namespace detail

/// Generators of Aut(g), as a PermGroup.
inline PermGroup automorphism_group(const Graph& g) {
  detail::check_cap(g);
  const std::size_t n = g.vertex_count();
  if (n == 0) return PermGroup::trivial(0);
  const auto path = detail::reference_path(g, ColoredPartition::unit(n));
  std::vector<Permutation> gens;
  detail::OrbitTracker orbits(n);

  for (std::size_t level = path.size() - 1; level-- > 0;) {
    const auto& node = path[level];
    const auto& cell = node.partition.cells()[node.partition.cell_of(node.chosen)];
    std::vector<Vertex> tried{node.chosen};
    for (Vertex w : cell) {
      const Vertex rw = orbits.find(w);
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return orbits.find(t) == rw; })) continue;
      tried.push_back(w);
      auto found =
          detail::match_subtree(g, path, g, refine(g, node.partition.individualize(w)), level + 1);
      if (found) {
        orbits.absorb(*found);
        gens.push_back(std::move(*found));
      }
    }
  }
  return PermGroup(n, std::move(gens));
}

/// An isomorphism a -> b (as a permutation of vertex indices), if one exists.
inline std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  detail::check_cap(a);
  detail::check_cap(b);
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  const std::size_t n = a.vertex_count();
  if (n == 0) return Permutation::identity(0);
  const auto path = detail::reference_path(a, ColoredPartition::unit(n));
  const ColoredPartition root = refine(b, ColoredPartition::unit(n));
  if (root.quotient_invariant(b) != path.front().invariant) return std::nullopt;
  if (root.is_discrete()) return detail::match_subtree(a, path, b, root, 0);

  // At the root only one vertex per Aut(b)-orbit of the target cell needs trying.
  const PermGroup aut_b = automorphism_group(b);
  const auto& cell = root.cells()[root.first_nonsingleton()];
  std::vector<char> done(n, 0);
  for (Vertex w : cell) {
    if (done[w]) continue;
    for (Point q : aut_b.orbit(w)) done[q] = 1;
    if (auto found = detail::match_subtree(a, path, b, refine(b, root.individualize(w)), 1)) return found;
  }
  return std::nullopt;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

// -- transitivity -----------------------------------------------------------

inline bool is_vertex_transitive(const Graph&, const PermGroup& aut) { return aut.is_transitive(); }

namespace detail {

template <typename Item, typename Act>
std::size_t count_orbits(const std::vector<Item>& items, const std::vector<Permutation>& gens, Act act) {
  std::map<Item, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) index[items[i]] = i;
  std::vector<std::size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t orbits = items.size();
  for (const auto& p : gens) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::size_t a = find(i), b = find(index.at(act(p, items[i])));
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --orbits;
      }
    }
  }
  return orbits;
}

}  // namespace detail

/// Number of Aut-orbits on unordered edges.
inline std::size_t edge_orbit_count(const Graph& g, const PermGroup& aut) {
  return detail::count_orbits(g.edges(), aut.generators(), [](const Permutation& p, const Edge& e) {
    const Vertex u = p[e.first], v = p[e.second];
    return Edge{std::min(u, v), std::max(u, v)};
  });
}

/// Number of Aut-orbits on arcs (ordered adjacent pairs).
inline std::size_t arc_orbit_count(const Graph& g, const PermGroup& aut) {
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  return detail::count_orbits(arcs, aut.generators(),
                              [](const Permutation& p, const Edge& e) { return Edge{p[e.first], p[e.second]}; });
}

/// Graphs without edges count as edge- and arc-transitive.
inline bool is_edge_transitive(const Graph& g, const PermGroup& aut) { return edge_orbit_count(g, aut) <= 1; }
inline bool is_arc_transitive(const Graph& g, const PermGroup& aut) { return arc_orbit_count(g, aut) <= 1; }

inline bool is_vertex_transitive(const Graph& g) { return is_vertex_transitive(g, automorphism_group(g)); }
inline bool is_edge_transitive(const Graph& g) { return is_edge_transitive(g, automorphism_group(g)); }
inline bool is_arc_transitive(const Graph& g) { return is_arc_transitive(g, automorphism_group(g)); }

}  // namespace semicayley
