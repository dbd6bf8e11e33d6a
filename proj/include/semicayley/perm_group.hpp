#pragma once

// Permutation groups given by generators, backed by a deterministic
// Schreier-Sims stabilizer chain.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semicayley/errors.hpp"
#include "semicayley/permutation.hpp"

namespace semicayley {

using BigInt = boost::multiprecision::cpp_int;

class PermGroup {
 public:
  /// One level of the chain: the group fixing base[0..i-1], its orbit of
  /// base[i], and for each orbit point p a transversal element u_p with
  /// base[i]^u_p = p.
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<Point> orbit;
  };

  PermGroup() = default;

  /// `base_prefix` forces the first base points; the rest are chosen as the
  /// smallest point moved by the element that needs a new level.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix = {})
      : degree_(degree) {
    for (auto& g : generators) {
      if (g.degree() != degree) {
        throw InvalidArgumentError("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                                   std::to_string(degree));
      }
      if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end()) {
        generators_.push_back(std::move(g));
      }
    }
    for (Point b : base_prefix) {
      if (b >= degree) throw InvalidArgumentError("base point out of range");
      Level lv;
      lv.base = b;
      levels_.push_back(std::move(lv));
    }
    build_chain();
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Level>& chain() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> out;
    for (const auto& lv : levels_) out.push_back(lv.base);
    return out;
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& lv : levels_) n *= lv.orbit.size();
    return n;
  }

  /// Strips `g` through the chain from level `start`. Returns the residue and
  /// the level at which sifting stopped (== chain length if it went through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      const Point img = g[levels_[i].base];
      const auto& u = levels_[i].transversal[img];
      if (!u) return {std::move(g), i};
      g = g.then(u->inverse());
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) {
      throw InvalidArgumentError("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(degree_));
    }
    auto [residue, level] = sift(p);
    return level == levels_.size() && residue.is_identity();
  }

  std::vector<Point> orbit(Point alpha) const {
    if (alpha >= degree_) throw InvalidArgumentError("point out of range");
    std::vector<char> seen(degree_, 0);
    std::vector<Point> out{alpha};
    seen[alpha] = 1;
    for (std::size_t h = 0; h < out.size(); ++h) {
      for (const auto& g : generators_) {
        const Point q = g[out[h]];
        if (!seen[q]) {
          seen[q] = 1;
          out.push_back(q);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Orbit partition, each orbit sorted, orbits ordered by minimal point.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<Point>> out;
    for (Point p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      auto orb = orbit(p);
      for (Point q : orb) seen[q] = 1;
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

  /// Every point stabilizer is trivial, i.e. every orbit has length |G|.
  bool is_semiregular() const {
    const BigInt n = order();
    for (const auto& orb : orbits()) {
      if (BigInt(orb.size()) != n) return false;
    }
    return true;
  }

  PermGroup point_stabilizer(Point alpha) const {
    if (alpha >= degree_) throw InvalidArgumentError("point " + std::to_string(alpha) + " out of range");
    PermGroup rebased(degree_, generators_, {alpha});
    if (rebased.levels_.size() < 2) return trivial(degree_);
    return PermGroup(degree_, rebased.levels_[1].generators);
  }

  /// Every element, enumerated from the chain. Throws if |G| exceeds `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const {
    if (order() > limit) throw ResourceLimitError("group of order " + order().str() + " is too large to list");
    std::vector<Permutation> out{Permutation::identity(degree_)};
    // g = u_k * ... * u_1 * u_0 (deepest level applied first)
    for (std::size_t i = levels_.size(); i-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(out.size() * levels_[i].orbit.size());
      for (const auto& h : out) {
        for (Point p : levels_[i].orbit) next.push_back(h.then(*levels_[i].transversal[p]));
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void recompute_orbit(Level& lv) const {
    lv.transversal.assign(degree_, std::nullopt);
    lv.transversal[lv.base] = Permutation::identity(degree_);
    lv.orbit = {lv.base};
    for (std::size_t h = 0; h < lv.orbit.size(); ++h) {
      const Point p = lv.orbit[h];
      for (const auto& s : lv.generators) {
        const Point q = s[p];
        if (!lv.transversal[q]) {
          lv.transversal[q] = lv.transversal[p]->then(s);
          lv.orbit.push_back(q);
        }
      }
    }
  }

  /// Adds `g` as a strong generator to levels [from, to], creating level `to` if needed.
  void add_strong_generator(const Permutation& g, std::size_t from, std::size_t to) {
    if (to == levels_.size()) {
      Level lv;
      lv.base = static_cast<Point>(g.first_moved());
      levels_.push_back(std::move(lv));
    }
    for (std::size_t l = from; l <= to; ++l) {
      auto& gens = levels_[l].generators;
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
      recompute_orbit(levels_[l]);
    }
  }

  void build_chain() {
    for (auto& lv : levels_) recompute_orbit(lv);
    for (const auto& g : generators_) {
      auto [residue, level] = sift(g);
      if (!residue.is_identity()) add_strong_generator(residue, 0, level);
    }
    // Schreier generators u_p s u_{p^s}^-1 of every level must sift through
    // the levels below it.
    std::size_t i = levels_.size();
    while (i > 0) {
      const std::size_t lvl = i - 1;
      bool extended = false;
      for (std::size_t oi = 0; oi < levels_[lvl].orbit.size() && !extended; ++oi) {
        const Point p = levels_[lvl].orbit[oi];
        for (std::size_t si = 0; si < levels_[lvl].generators.size(); ++si) {
          const Level& lv = levels_[lvl];
          const Permutation& s = lv.generators[si];
          const Permutation schreier = lv.transversal[p]->then(s).then(lv.transversal[s[p]]->inverse());
          if (schreier.is_identity()) continue;
          auto [residue, level] = sift(schreier, lvl + 1);
          if (!residue.is_identity()) {
            add_strong_generator(residue, lvl + 1, level);
            i = level + 1;
            extended = true;
            break;
          }
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// H is a subgroup of G: every generator of H lies in G.
inline bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw InvalidArgumentError("degree mismatch");
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Permutation& x) { return g.contains(x); });
}

/// Normality of H in G, tested on generators: g^-1 h g in H for every
/// generator g of G and h of H.
inline bool is_normal_subgroup(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup(h, g)) throw PreconditionError("H is not a subgroup of G");
  for (const auto& x : g.generators()) {
    for (const auto& y : h.generators()) {
      if (!h.contains(y.conjugate_by(x))) return false;
    }
  }
  return true;
}

}  // namespace semicayley
