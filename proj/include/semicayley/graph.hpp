#pragma once

// Immutable simple undirected graphs, and the constructors for Cayley graphs,
// one-matching semi-Cayley graphs SC(G; R, L, S) and generalized Petersen graphs.

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semicayley/abelian_group.hpp"
#include "semicayley/errors.hpp"
#include "semicayley/parse.hpp"
#include "semicayley/permutation.hpp"

namespace semicayley {

using Vertex = Point;
using Edge = std::pair<Vertex, Vertex>;

/// Side 1 carries the right edges, side 2 the left edges.
struct VertexLabel {
  Element element;
  int side = 1;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgumentError on loops, repeated edges or out-of-range endpoints.
  Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<VertexLabel> labels = {})
      : n_(n), adj_(n * n, 0), neighbors_(n), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n) throw InvalidArgumentError("label count differs from vertex count");
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw InvalidArgumentError("edge endpoint out of range");
      if (u == v) throw InvalidArgumentError("loop at vertex " + std::to_string(u));
      if (adj_[u * n + v]) {
        throw InvalidArgumentError("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
      adj_[u * n + v] = adj_[v * n + u] = 1;
      neighbors_[u].push_back(v);
      neighbors_[v].push_back(u);
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    std::sort(edges_.begin(), edges_.end());
    if (!labels_.empty()) {
      std::set<std::pair<Element, int>> distinct;
      for (const auto& l : labels_) distinct.emplace(l.element, l.side);
      if (distinct.size() != n) throw InvalidArgumentError("vertex labels are not distinct");
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : neighbors_) d = std::max(d, nb.size());
    return d;
  }

  bool is_automorphism(const Permutation& p) const {
    if (p.degree() != n_) return false;
    for (auto [u, v] : edges_) {
      if (!adjacent(p[u], p[v])) return false;
    }
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  /// "p graph <n> <m>" followed by one "u v" line per edge.
  std::string to_edge_list() const {
    std::string out = "p graph " + std::to_string(n_) + " " + std::to_string(edges_.size()) + "\n";
    for (auto [u, v] : edges_) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["m"] = edges_.size();
    auto& e = j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : edges_) e.push_back({u, v});
    if (has_labels()) {
      auto& l = j["labels"] = nlohmann::ordered_json::array();
      for (const auto& lab : labels_) l.push_back({{"element", lab.element.coords}, {"side", lab.side}});
    }
    return j;
  }

 private:
  std::size_t n_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<Edge> edges_;
  std::vector<VertexLabel> labels_;
};

/// Parses the edge-list text format written by Graph::to_edge_list.
inline Graph parse_edge_list(const std::string& text) {
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::size_t line_start = 0;
  bool header = false;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    const std::string line = text.substr(line_start, line_end - line_start);
    if (!line.empty()) {
      if (!header) {
        if (std::sscanf(line.c_str(), "p graph %zu %zu", &n, &m) != 2) throw ParseError("bad header", line_start);
        header = true;
      } else {
        unsigned u = 0, v = 0;
        if (std::sscanf(line.c_str(), "%u %u", &u, &v) != 2) throw ParseError("bad edge line", line_start);
        edges.emplace_back(u, v);
      }
    }
    line_start = line_end + 1;
  }
  if (!header) throw ParseError("missing header", 0);
  if (edges.size() != m) throw ParseError("edge count differs from header", text.size());
  return Graph(n, edges);
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

/// Length of a shortest cycle, or 0 for a forest.
inline std::size_t girth(const Graph& g) {
  std::size_t best = 0;
  const std::size_t n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = static_cast<int>(v);
          queue.push_back(w);
        } else if (parent[v] != static_cast<int>(w)) {
          const std::size_t len = static_cast<std::size_t>(dist[v] + dist[w] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// -- connection sets --------------------------------------------------------

namespace detail {

inline std::vector<Element> normalized_set(const AbelianGroup& group, std::vector<Element> set, const char* name) {
  for (const auto& e : set) {
    try {
      group.validate(e);
    } catch (const InvalidElementError& err) {
      throw InvalidSpecError(std::string(name) + ": " + err.what());
    }
  }
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
    throw InvalidSpecError(std::string(name) + " contains a repeated element");
  }
  return set;
}

inline bool inverse_closed(const AbelianGroup& group, const std::vector<Element>& set) {
  return std::all_of(set.begin(), set.end(), [&](const Element& e) {
    return std::binary_search(set.begin(), set.end(), group.neg(e));
  });
}

inline bool contains(const std::vector<Element>& sorted, const Element& e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

}  // namespace detail

/// The triple (R, L, S) over an abelian group, with R = -R, L = -L and the
/// identity in neither. Sets are stored sorted.
class ConnectionSpec {
 public:
  /// One-matching spec: S = {0}.
  ConnectionSpec(AbelianGroup group, std::vector<Element> right, std::vector<Element> left)
      : ConnectionSpec(group, std::move(right), std::move(left), std::vector<Element>{group.identity()}) {}

  ConnectionSpec(AbelianGroup group, std::vector<Element> right, std::vector<Element> left,
                 std::vector<Element> spokes)
      : group_(std::move(group)) {
    if (group_.is_trivial()) throw InvalidSpecError("the base group must be nontrivial");
    right_ = detail::normalized_set(group_, std::move(right), "R");
    left_ = detail::normalized_set(group_, std::move(left), "L");
    spokes_ = detail::normalized_set(group_, std::move(spokes), "S");
    const Element zero = group_.identity();
    if (detail::contains(right_, zero)) throw InvalidSpecError("identity must not lie in R");
    if (detail::contains(left_, zero)) throw InvalidSpecError("identity must not lie in L");
    if (!detail::inverse_closed(group_, right_)) throw InvalidSpecError("R is not inverse-closed (R != -R)");
    if (!detail::inverse_closed(group_, left_)) throw InvalidSpecError("L is not inverse-closed (L != -L)");
    if (right_.empty() && left_.empty()) throw InvalidSpecError("R and L are both empty");
  }

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<Element>& right() const noexcept { return right_; }
  const std::vector<Element>& left() const noexcept { return left_; }
  const std::vector<Element>& spokes() const noexcept { return spokes_; }

  bool is_one_matching() const { return spokes_.size() == 1 && spokes_[0] == group_.identity(); }

  /// <R u L> = G.
  bool is_connected() const {
    std::vector<Element> gens = right_;
    gens.insert(gens.end(), left_.begin(), left_.end());
    return generated_subgroup_order(group_, gens) == group_.order();
  }

  /// The same spec with R and L interchanged.
  ConnectionSpec swapped() const { return ConnectionSpec(group_, left_, right_, spokes_); }

  std::string to_string() const {
    std::string out = "SC(" + group_.to_string() + "; " + format_element_set(right_) + ", " +
                      format_element_set(left_);
    if (!is_one_matching()) out += ", " + format_element_set(spokes_);
    return out + ")";
  }

  friend bool operator==(const ConnectionSpec& a, const ConnectionSpec& b) {
    return a.group_.factors() == b.group_.factors() && a.right_ == b.right_ && a.left_ == b.left_ &&
           a.spokes_ == b.spokes_;
  }

 private:
  AbelianGroup group_;
  std::vector<Element> right_, left_, spokes_;
};

/// Vertex index of (x, side): side 1 at [0, |G|), side 2 at [|G|, 2|G|), each
/// side in lexicographic element order.
inline Vertex sc_vertex(const AbelianGroup& group, std::size_t element_index, int side) {
  return static_cast<Vertex>(element_index + (side == 2 ? group.order() : 0));
}

inline Graph build_sc_graph(const ConnectionSpec& spec) {
  const AbelianGroup& g = spec.group();
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  auto indices = [&](const std::vector<Element>& set) {
    std::vector<std::size_t> out;
    for (const auto& e : set) out.push_back(g.index_of(e));
    return out;
  };
  const auto right = indices(spec.right());
  const auto left = indices(spec.left());
  const auto spokes = indices(spec.spokes());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t r : right) {
      const std::size_t y = g.add_index(x, r);
      if (x < y) edges.emplace_back(sc_vertex(g, x, 1), sc_vertex(g, y, 1));
    }
    for (std::size_t l : left) {
      const std::size_t y = g.add_index(x, l);
      if (x < y) edges.emplace_back(sc_vertex(g, x, 2), sc_vertex(g, y, 2));
    }
    for (std::size_t s : spokes) edges.emplace_back(sc_vertex(g, x, 1), sc_vertex(g, g.add_index(x, s), 2));
  }
  std::vector<VertexLabel> labels;
  labels.reserve(2 * n);
  for (int side = 1; side <= 2; ++side) {
    for (std::size_t x = 0; x < n; ++x) labels.push_back({g.element_at(x), side});
  }
  return Graph(2 * n, edges, std::move(labels));
}

/// Cay(G, S) on vertex set G (lexicographic indices), edges {x, x+s}.
inline Graph build_cayley(const AbelianGroup& group, std::vector<Element> connection) {
  const auto set = detail::normalized_set(group, std::move(connection), "S");
  if (detail::contains(set, group.identity())) throw InvalidSpecError("identity must not lie in S");
  if (!detail::inverse_closed(group, set)) throw InvalidSpecError("S is not inverse-closed (S != -S)");
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < group.order(); ++x) {
    for (const auto& s : set) {
      const std::size_t y = group.add_index(x, group.index_of(s));
      if (x < y) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  }
  std::vector<VertexLabel> labels;
  for (std::size_t x = 0; x < group.order(); ++x) labels.push_back({group.element_at(x), 1});
  return Graph(group.order(), edges, std::move(labels));
}

/// GP(n, k): outer cycle on 0..n-1, inner vertices n..2n-1 joined at step k,
/// spokes i -- n+i. Requires n >= 3 and 1 <= k < n/2.
inline Graph build_gp(int n, int k) {
  if (n < 3) throw InvalidArgumentError("GP(n,k) needs n >= 3");
  if (k < 1 || 2 * k >= n) throw InvalidArgumentError("GP(n,k) needs 1 <= k < n/2");
  std::vector<Edge> edges;
  const auto N = static_cast<Vertex>(n);
  for (Vertex i = 0; i < N; ++i) {
    edges.emplace_back(i, (i + 1) % N);
    edges.emplace_back(N + i, N + (i + static_cast<Vertex>(k)) % N);
    edges.emplace_back(i, N + i);
  }
  return Graph(2 * static_cast<std::size_t>(n), edges);
}

/// Quotient of SC(G; R, L, {0}) by the matching blocks {(g,1),(g,2)}: block g
/// is adjacent to block h when some edge of the graph joins them. Requires
/// R and L disjoint, in which case the result is Cay(G, R u L) of valency |R|+|L|.
inline Graph quotient_matching_graph(const ConnectionSpec& spec) {
  if (!spec.is_one_matching()) throw PreconditionError("quotient needs a one-matching spec");
  std::vector<Element> common;
  std::set_intersection(spec.right().begin(), spec.right().end(), spec.left().begin(), spec.left().end(),
                        std::back_inserter(common));
  if (!common.empty()) throw PreconditionError("quotient needs R and L to be disjoint");

  const Graph gamma = build_sc_graph(spec);
  const std::size_t n = spec.group().order();
  std::set<Edge> blocks;
  for (auto [u, v] : gamma.edges()) {
    const Vertex bu = u % n, bv = v % n;
    if (bu != bv) blocks.emplace(std::min(bu, bv), std::max(bu, bv));
  }
  std::vector<VertexLabel> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back({spec.group().element_at(x), 1});
  Graph q(n, std::vector<Edge>(blocks.begin(), blocks.end()), std::move(labels));
  const std::size_t valency = spec.right().size() + spec.left().size();
  for (Vertex v = 0; v < n; ++v) {
    if (q.degree(v) != valency) throw std::logic_error("quotient valency differs from |R|+|L|");
  }
  return q;
}

}  // namespace semicayley
