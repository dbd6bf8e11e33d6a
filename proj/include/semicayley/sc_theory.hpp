#pragma once

// Normality of one-matching semi-Cayley graphs SC(G; R, L, {0}).
//
// Notation (additive): rho_g translates both sides by g; for sigma in Aut(G),
// phi_sigma applies sigma on each side and psi_sigma applies sigma while
// swapping the sides. X collects the phi_sigma with sigma(R)=R, sigma(L)=L,
// Y the psi_sigma with sigma(R)=L, sigma(L)=R. The normalizer of R_G in
// A = Aut(SC) is R_G x| (X u Y), so R_G is normal iff |A| = |G| * |X u Y|.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semicayley/abelian_group.hpp"
#include "semicayley/aut_search.hpp"
#include "semicayley/errors.hpp"
#include "semicayley/graph.hpp"
#include "semicayley/parse.hpp"
#include "semicayley/perm_group.hpp"

namespace semicayley {

/// rho_g: (x, i) -> (x + g, i).
inline Permutation translation(const ConnectionSpec& spec, const Element& g) {
  const AbelianGroup& grp = spec.group();
  const std::size_t n = grp.order();
  const std::size_t gi = grp.index_of(g);
  std::vector<Point> im(2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = grp.add_index(x, gi);
    im[x] = static_cast<Point>(y);
    im[n + x] = static_cast<Point>(n + y);
  }
  return Permutation(std::move(im));
}

/// R_G, generated by the translations along the standard generators.
inline PermGroup build_RG(const ConnectionSpec& spec) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < spec.group().rank(); ++i) gens.push_back(translation(spec, spec.group().generator(i)));
  return PermGroup(2 * spec.group().order(), std::move(gens));
}

/// phi_sigma (side-preserving) or psi_sigma (side-swapping).
inline Permutation lift_automorphism(const ConnectionSpec& spec, const GroupAutomorphism& sigma, bool swap_sides) {
  const std::size_t n = spec.group().order();
  std::vector<Point> im(2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = sigma.apply_index(x);
    im[x] = static_cast<Point>(swap_sides ? n + y : y);
    im[n + x] = static_cast<Point>(swap_sides ? y : n + y);
  }
  return Permutation(std::move(im));
}

namespace detail {

inline std::vector<std::size_t> image_of_set(const AbelianGroup& g, const GroupAutomorphism& sigma,
                                             const std::vector<Element>& set) {
  std::vector<std::size_t> out;
  for (const auto& e : set) out.push_back(sigma.apply_index(g.index_of(e)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> index_set(const AbelianGroup& g, const std::vector<Element>& set) {
  std::vector<std::size_t> out;
  for (const auto& e : set) out.push_back(g.index_of(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// The automorphisms sigma of G feeding X and Y.
struct LiftedAutomorphisms {
  std::vector<GroupAutomorphism> preserving;  // sigma(R)=R, sigma(L)=L
  std::vector<GroupAutomorphism> swapping;    // sigma(R)=L, sigma(L)=R
};

inline LiftedAutomorphisms normalizing_automorphisms(const ConnectionSpec& spec) {
  const AbelianGroup& g = spec.group();
  const auto right = detail::index_set(g, spec.right());
  const auto left = detail::index_set(g, spec.left());
  LiftedAutomorphisms out;
  for (auto& sigma : enumerate_automorphisms(g)) {
    const auto r = detail::image_of_set(g, sigma, spec.right());
    const auto l = detail::image_of_set(g, sigma, spec.left());
    if (r == right && l == left) out.preserving.push_back(sigma);
    if (r == left && l == right) out.swapping.push_back(sigma);
  }
  return out;
}

namespace detail {

inline std::vector<Permutation> verified_lifts(const ConnectionSpec& spec, const Graph& gamma,
                                               const std::vector<GroupAutomorphism>& sigmas, bool swap_sides) {
  std::vector<Permutation> out;
  for (const auto& s : sigmas) {
    Permutation p = lift_automorphism(spec, s, swap_sides);
    if (!gamma.is_automorphism(p)) throw std::logic_error("lift of a group automorphism is not a graph automorphism");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

inline std::vector<Permutation> compute_X(const ConnectionSpec& spec) {
  return detail::verified_lifts(spec, build_sc_graph(spec), normalizing_automorphisms(spec).preserving, false);
}

inline std::vector<Permutation> compute_Y(const ConnectionSpec& spec) {
  return detail::verified_lifts(spec, build_sc_graph(spec), normalizing_automorphisms(spec).swapping, true);
}

/// The group generated by X u Y. Throws std::logic_error if X u Y is not
/// closed (its order must equal |X| + |Y|).
inline PermGroup aut_GRL(const ConnectionSpec& spec) {
  auto x = compute_X(spec);
  const auto y = compute_Y(spec);
  const std::size_t total = x.size() + y.size();
  x.insert(x.end(), y.begin(), y.end());
  PermGroup grp(2 * spec.group().order(), std::move(x));
  if (grp.order() != total) throw std::logic_error("X u Y is not closed under composition");
  return grp;
}

namespace detail {

inline void require_theory_preconditions(const ConnectionSpec& spec) {
  if (!spec.is_one_matching()) throw PreconditionError("spec is not one-matching");
  if (!spec.is_connected()) throw PreconditionError("spec is disconnected: <R u L> != G");
}

}  // namespace detail

/// R_G normal in Aut(SC). Checked by conjugating generators and, independently,
/// by the order identity |A| = |G| * |X u Y|; a disagreement is a logic error.
inline bool is_normal_sc(const ConnectionSpec& spec) {
  detail::require_theory_preconditions(spec);
  const Graph gamma = build_sc_graph(spec);
  const PermGroup aut = automorphism_group(gamma);
  const bool normal = is_normal_subgroup(build_RG(spec), aut);
  const auto lifts = normalizing_automorphisms(spec);
  const BigInt normalizer = BigInt(spec.group().order()) * (lifts.preserving.size() + lifts.swapping.size());
  if (normal != (aut.order() == normalizer)) {
    throw std::logic_error("normality test disagrees with |A| = |G||Aut(G;R,L)| on " + spec.to_string());
  }
  return normal;
}

/// sigma (a permutation of G by element index) is colour-preserving for the
/// connection elements `colours`: sigma(x+s) is sigma(x)+s or sigma(x)-s for
/// every x and every s in `colours`.
inline bool is_color_preserving(const AbelianGroup& group, std::span<const Element> colours,
                                std::span<const std::size_t> sigma) {
  if (sigma.size() != group.order()) throw InvalidArgumentError("sigma must act on every element of G");
  for (const auto& s : colours) {
    const std::size_t si = group.index_of(s);
    const std::size_t ni = group.neg_index(si);
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::size_t img = sigma[group.add_index(x, si)];
      if (img != group.add_index(sigma[x], si) && img != group.add_index(sigma[x], ni)) return false;
    }
  }
  return true;
}

inline bool is_color_preserving(const AbelianGroup& group, const Element& a, const Element& b,
                                std::span<const std::size_t> sigma) {
  const std::array<Element, 2> colours{a, b};
  return is_color_preserving(group, std::span<const Element>(colours), sigma);
}

/// sigma is a group automorphism of G.
inline bool is_group_automorphism(const AbelianGroup& group, std::span<const std::size_t> sigma) {
  if (sigma.size() != group.order() || sigma[0] != 0) return false;
  for (std::size_t x = 0; x < group.order(); ++x) {
    for (std::size_t y = 0; y < group.order(); ++y) {
      if (sigma[group.add_index(x, y)] != group.add_index(sigma[x], sigma[y])) return false;
    }
  }
  return true;
}

// -- the eight exceptional families -------------------------------------------

/// The (n, k) pairs of the exceptional generalized Petersen family.
inline constexpr std::array<std::pair<int, int>, 6> kExceptionalGp{
    {{5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}, {24, 5}}};

/// One way a spec fits an exceptional family.
struct CaseMatch {
  int family = 0;        // 1..8
  bool swapped = false;  // matched with R and L interchanged
  std::vector<std::pair<std::string, Element>> generators;  // named witnesses a, b, c
  int n = 0, k = 0;      // family 6 only

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["case"] = family;
    j["swapped"] = swapped;
    nlohmann::ordered_json gens = nlohmann::ordered_json::object();
    for (const auto& [name, e] : generators) gens[name] = to_string(e);
    j["generators"] = gens;
    if (family == 6) {
      j["n"] = n;
      j["k"] = k;
    }
    return j;
  }
};

struct ClassificationResult {
  std::vector<CaseMatch> matches;  // every matching family and orientation, by family

  bool exceptional() const { return !matches.empty(); }
  /// Lowest matching family, 0 when none.
  int lowest() const { return matches.empty() ? 0 : matches.front().family; }
};

namespace detail {

class FamilyMatcher {
 public:
  FamilyMatcher(const AbelianGroup& g, const std::vector<Element>& r, const std::vector<Element>& l, bool swapped)
      : g_(g), r_(r), l_(l), swapped_(swapped) {}

  void collect(std::vector<CaseMatch>& out) const {
    family1(out);
    family2(out);
    family3(out);
    family4(out);
    family5(out);
    family6(out);
    family7(out);
    family8(out);
  }

 private:
  CaseMatch make(int family, std::vector<std::pair<std::string, Element>> gens) const {
    return CaseMatch{family, swapped_, std::move(gens), 0, 0};
  }

  int ord(const Element& e) const { return g_.order_of(e); }

  std::size_t span(const std::vector<Element>& gens) const { return generated_subgroup_order(g_, gens); }

  std::vector<Element> sorted(std::vector<Element> v) const {
    std::sort(v.begin(), v.end());
    return v;
  }

  /// R = {a, -a} with o(a) > 2; returns a.
  static std::optional<Element> symmetric_pair(const AbelianGroup& g, const std::vector<Element>& set) {
    if (set.size() != 2 || set[1] != g.neg(set[0])) return std::nullopt;
    return set[0];
  }

  void family1(std::vector<CaseMatch>& out) const {
    if (r_.size() == 1 && l_.size() == 1) out.push_back(make(1, {{"a", r_[0]}, {"b", l_[0]}}));
  }

  void family2(std::vector<CaseMatch>& out) const {
    if (r_.size() != 2 || l_.size() != 2) return;
    std::vector<Element> common;
    std::set_intersection(r_.begin(), r_.end(), l_.begin(), l_.end(), std::back_inserter(common));
    if (common.size() != 1) return;
    const Element& b = common[0];
    const Element& a = r_[0] == b ? r_[1] : r_[0];
    const Element& c = l_[0] == b ? l_[1] : l_[0];
    out.push_back(make(2, {{"a", a}, {"b", b}, {"c", c}}));
  }

  void family3(std::vector<CaseMatch>& out) const {
    if (r_ != l_) return;
    const auto a = symmetric_pair(g_, r_);
    if (a && ord(*a) == 4) out.push_back(make(3, {{"a", *a}}));
  }

  void family4(std::vector<CaseMatch>& out) const {
    if (r_.size() != 2 || ord(r_[0]) != 2 || ord(r_[1]) != 2) return;
    const auto c = symmetric_pair(g_, l_);
    if (!c || ord(*c) != 4 || g_.order() != 16) return;
    if (span({r_[0], r_[1], *c}) != 16) return;
    out.push_back(make(4, {{"a", r_[0]}, {"b", r_[1]}, {"c", *c}}));
  }

  void family5(std::vector<CaseMatch>& out) const {
    const auto a = symmetric_pair(g_, r_);
    if (!a || ord(*a) != 4 || g_.order() != 8 || l_.size() != 2) return;
    for (const auto& b : l_) {
      if (ord(b) != 2) continue;
      if (sorted({b, g_.add(b, g_.scale(*a, 2))}) != l_) continue;
      if (span({*a, b}) != 8) continue;
      out.push_back(make(5, {{"a", *a}, {"b", b}}));
      return;
    }
  }

  void family6(std::vector<CaseMatch>& out) const {
    const auto a = symmetric_pair(g_, r_);
    if (!a) return;
    const int n = ord(*a);
    if (static_cast<std::size_t>(n) != g_.order()) return;
    for (auto [gn, k] : kExceptionalGp) {
      if (gn != n) continue;
      if (sorted({g_.scale(*a, k), g_.scale(*a, -k)}) == l_) {
        CaseMatch m = make(6, {{"a", *a}});
        m.n = n;
        m.k = k;
        out.push_back(std::move(m));
      }
    }
  }

  void family7(std::vector<CaseMatch>& out) const {
    const auto a = symmetric_pair(g_, r_);
    if (!a || ord(*a) != 10 || g_.order() != 20 || l_.size() != 2) return;
    for (int t : {3, 2}) {
      for (const auto& l : l_) {
        const Element b = g_.sub(l, g_.scale(*a, t));
        if (ord(b) != 2) continue;
        if (sorted({g_.add(g_.scale(*a, t), b), g_.add(g_.scale(*a, -t), b)}) != l_) continue;
        if (span({*a, b}) != 20) continue;
        out.push_back(make(7, {{"a", *a}, {"b", b}}));
        return;
      }
    }
  }

  void family8(std::vector<CaseMatch>& out) const {
    const auto a = symmetric_pair(g_, r_);
    if (!a || ord(*a) != 4 || g_.order() != 8 || l_.size() != 2) return;
    for (const auto& l : l_) {
      const Element b = g_.sub(l, *a);
      if (ord(b) != 2) continue;
      if (sorted({g_.add(*a, b), g_.add(g_.neg(*a), b)}) != l_) continue;
      if (span({*a, b}) != 8) continue;
      out.push_back(make(8, {{"a", *a}, {"b", b}}));
      return;
    }
  }

  const AbelianGroup& g_;
  const std::vector<Element>& r_;
  const std::vector<Element>& l_;
  bool swapped_;
};

}  // namespace detail

/// Matches the spec, in both orientations, against the eight exceptional
/// families. Generators are searched over G, not read off the input.
inline ClassificationResult classify_theorem1(const ConnectionSpec& spec) {
  detail::require_theory_preconditions(spec);
  if (spec.right().size() > 2 || spec.left().size() > 2) throw PreconditionError("|R| and |L| must be at most 2");
  ClassificationResult res;
  detail::FamilyMatcher(spec.group(), spec.right(), spec.left(), false).collect(res.matches);
  detail::FamilyMatcher(spec.group(), spec.left(), spec.right(), true).collect(res.matches);
  std::stable_sort(res.matches.begin(), res.matches.end(),
                   [](const CaseMatch& x, const CaseMatch& y) { return x.family < y.family; });
  return res;
}

// -- full per-instance record ---------------------------------------------------

struct Verdict {
  std::string group;
  std::string right;
  std::string left;
  std::size_t vertices = 0;
  BigInt aut_order = 0;
  bool normal = false;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  BigInt aut_grl_order = 0;        // order of <X u Y>; equals x_size + y_size
  bool order_identity = false;     // normal == (|A| == |G| |X u Y|)
  BigInt stabilizer_order = 0;     // |A_(0,1)|
  bool stabilizer_is_x = false;    // A_(0,1) == X elementwise
  bool lifts_in_aut = false;       // X u Y inside A
  std::optional<BigInt> normalizer_order;   // by enumeration, when |A| is small
  std::optional<bool> normalizer_stabilizer_is_x;  // A_(0,1) n N_A(R_G) == X
  std::optional<bool> color_preserving;     // cross-check for intransitive {±a},{±b} specs
  ClassificationResult classification;
  std::vector<Permutation> aut_generators;

  int theorem_case() const { return classification.lowest(); }
};

inline constexpr std::size_t kNormalizerEnumerationLimit = 2000;

inline Verdict evaluate(const ConnectionSpec& spec) {
  detail::require_theory_preconditions(spec);
  const AbelianGroup& g = spec.group();
  const std::size_t n = g.order();
  Verdict v;
  v.group = g.to_string();
  v.right = format_element_set(spec.right());
  v.left = format_element_set(spec.left());
  v.vertices = 2 * n;

  const Graph gamma = build_sc_graph(spec);
  const PermGroup aut = automorphism_group(gamma);
  const PermGroup rg = build_RG(spec);
  v.aut_order = aut.order();
  v.aut_generators = aut.generators();
  v.normal = is_normal_subgroup(rg, aut);
  v.vertex_transitive = is_vertex_transitive(gamma, aut);
  v.edge_transitive = is_edge_transitive(gamma, aut);
  v.arc_transitive = is_arc_transitive(gamma, aut);

  const auto lifts = normalizing_automorphisms(spec);
  const auto x = detail::verified_lifts(spec, gamma, lifts.preserving, false);
  const auto y = detail::verified_lifts(spec, gamma, lifts.swapping, true);
  v.x_size = x.size();
  v.y_size = y.size();
  std::vector<Permutation> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  v.lifts_in_aut = std::all_of(xy.begin(), xy.end(), [&](const Permutation& p) { return aut.contains(p); });
  v.aut_grl_order = PermGroup(2 * n, xy).order();
  v.order_identity = v.normal == (v.aut_order == BigInt(n) * xy.size());

  const PermGroup stab = aut.point_stabilizer(0);
  v.stabilizer_order = stab.order();
  v.stabilizer_is_x = v.stabilizer_order == x.size() &&
                      std::all_of(x.begin(), x.end(), [&](const Permutation& p) { return stab.contains(p); });

  if (v.aut_order <= kNormalizerEnumerationLimit) {
    std::size_t normalizer = 0, normalizer_fixing = 0;
    bool fixing_outside_x = false;
    for (const auto& el : aut.elements()) {
      const bool normalizes = std::all_of(rg.generators().begin(), rg.generators().end(),
                                          [&](const Permutation& r) { return rg.contains(r.conjugate_by(el)); });
      if (!normalizes) continue;
      ++normalizer;
      if (el[0] == 0) {
        ++normalizer_fixing;
        if (std::find(x.begin(), x.end(), el) == x.end()) fixing_outside_x = true;
      }
    }
    v.normalizer_order = BigInt(normalizer);
    v.normalizer_stabilizer_is_x = !fixing_outside_x && normalizer_fixing == x.size();
  }

  // Intransitive graphs with R = {±a}, L = {±b} disjoint: every automorphism
  // keeps the sides, and the induced permutation of G must be colour-preserving.
  const auto a = spec.right().size() == 2 && spec.right()[1] == g.neg(spec.right()[0]) ? spec.right()[0] : Element{};
  const auto b = spec.left().size() == 2 && spec.left()[1] == g.neg(spec.left()[0]) ? spec.left()[0] : Element{};
  if (!v.vertex_transitive && !a.coords.empty() && !b.coords.empty() && a != b && a != g.neg(b)) {
    bool ok = true;
    for (const auto& p : aut.generators()) {
      std::vector<std::size_t> sigma(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (p[static_cast<Point>(i)] >= n || p[static_cast<Point>(n + i)] != p[static_cast<Point>(i)] + n) {
          ok = false;
          break;
        }
        sigma[i] = p[static_cast<Point>(i)];
      }
      if (!ok || !is_color_preserving(g, a, b, sigma)) {
        ok = false;
        break;
      }
    }
    v.color_preserving = ok;
  }

  v.classification = classify_theorem1(spec);
  return v;
}

inline nlohmann::ordered_json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

/// Flat JSON object, fixed field order.
inline nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["group"] = v.group;
  j["R"] = v.right;
  j["L"] = v.left;
  j["vertices"] = v.vertices;
  j["aut_order"] = big_to_json(v.aut_order);
  j["normal"] = v.normal;
  j["vertex_transitive"] = v.vertex_transitive;
  j["edge_transitive"] = v.edge_transitive;
  j["arc_transitive"] = v.arc_transitive;
  j["case"] = v.theorem_case();
  j["x_size"] = v.x_size;
  j["y_size"] = v.y_size;
  j["aut_grl_order"] = big_to_json(v.aut_grl_order);
  j["stabilizer_order"] = big_to_json(v.stabilizer_order);
  j["stabilizer_is_x"] = v.stabilizer_is_x;
  j["order_identity"] = v.order_identity;
  j["lifts_in_aut"] = v.lifts_in_aut;
  j["normalizer_order"] = v.normalizer_order ? big_to_json(*v.normalizer_order) : nlohmann::ordered_json();
  j["color_preserving"] = v.color_preserving ? nlohmann::ordered_json(*v.color_preserving) : nlohmann::ordered_json();
  auto& m = j["matches"] = nlohmann::ordered_json::array();
  for (const auto& c : v.classification.matches) m.push_back(c.to_json());
  return j;
}

}  // namespace semicayley
