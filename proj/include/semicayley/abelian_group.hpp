#pragma once

// Finite abelian groups as explicit direct products of cyclic groups.
//
// Elements are coordinate vectors over the *stored* factor list, so a group
// written Z4xZ2 has generators (1,0) and (0,1) exactly as written. Two groups
// compare equal when their invariant-factor forms agree. Every element also has
// a dense index in [0, |G|): the mixed-radix number with the first coordinate
// most significant, which makes index order equal to lexicographic order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "semicayley/errors.hpp"

namespace semicayley {

struct Element {
  std::vector<int> coords;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;
};

inline std::string to_string(const Element& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.coords[i]);
  }
  return out + ")";
}

namespace detail {

inline std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace detail

class AbelianGroup {
 public:
  /// Trivial group.
  AbelianGroup() = default;

  explicit AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int f : factors_) {
      if (f < 2) throw InvalidGroupError("cyclic factor " + std::to_string(f) + " is < 2");
    }
    order_ = 1;
    for (int f : factors_) {
      if (order_ > (std::size_t{1} << 40) / static_cast<std::size_t>(f)) {
        throw InvalidGroupError("group order too large");
      }
      order_ *= static_cast<std::size_t>(f);
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) {
      strides_[i - 1] = strides_[i] * static_cast<std::size_t>(factors_[i]);
    }
  }

  const std::vector<int>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  /// Invariant factors n1 | n2 | ... | nr, ascending.
  std::vector<int> invariant_factors() const {
    std::map<int, std::vector<int>> exponents;  // prime -> exponents of its prime-power parts
    for (int f : factors_) {
      for (auto [p, k] : detail::factorize(f)) exponents[p].push_back(k);
    }
    std::size_t len = 0;
    for (auto& [p, ks] : exponents) {
      std::sort(ks.begin(), ks.end(), std::greater<>());
      len = std::max(len, ks.size());
    }
    std::vector<int> out(len, 1);
    for (const auto& [p, ks] : exponents) {
      for (std::size_t j = 0; j < ks.size(); ++j) out[j] *= detail::ipow(p, ks[j]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  AbelianGroup canonical() const { return AbelianGroup(invariant_factors()); }

  /// Isomorphism test.
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.invariant_factors() == b.invariant_factors();
  }

  std::string to_string() const {
    if (factors_.empty()) return "Z1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += 'x';
      out += 'Z' + std::to_string(factors_[i]);
    }
    return out;
  }

  // -- elements ------------------------------------------------------------

  Element identity() const { return Element{std::vector<int>(rank(), 0)}; }

  /// Standard generator of factor i.
  Element generator(std::size_t i) const {
    Element e = identity();
    e.coords.at(i) = 1;
    return e;
  }

  void validate(const Element& e) const {
    if (e.coords.size() != rank()) {
      throw InvalidElementError("element " + semicayley::to_string(e) + " has " +
                                std::to_string(e.coords.size()) + " coordinates, group " + to_string() +
                                " has rank " + std::to_string(rank()));
    }
    for (std::size_t i = 0; i < rank(); ++i) {
      if (e.coords[i] < 0 || e.coords[i] >= factors_[i]) {
        throw InvalidElementError("coordinate " + std::to_string(i) + " of " + semicayley::to_string(e) +
                                  " is outside [0," + std::to_string(factors_[i]) + ")");
      }
    }
  }

  std::size_t index_of(const Element& e) const {
    validate(e);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx += static_cast<std::size_t>(e.coords[i]) * strides_[i];
    return idx;
  }

  Element element_at(std::size_t index) const {
    if (index >= order_) throw InvalidElementError("element index " + std::to_string(index) + " out of range");
    Element e = identity();
    for (std::size_t i = 0; i < rank(); ++i) {
      e.coords[i] = static_cast<int>((index / strides_[i]) % static_cast<std::size_t>(factors_[i]));
    }
    return e;
  }

  /// All elements in lexicographic order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
  }

  Element add(const Element& a, const Element& b) const {
    validate(a);
    validate(b);
    Element r = identity();
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
    return r;
  }

  Element neg(const Element& a) const {
    validate(a);
    Element r = identity();
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = (factors_[i] - a.coords[i]) % factors_[i];
    return r;
  }

  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

  Element scale(const Element& a, long long k) const {
    validate(a);
    Element r = identity();
    for (std::size_t i = 0; i < rank(); ++i) {
      long long v = (static_cast<long long>(a.coords[i]) * (k % factors_[i])) % factors_[i];
      r.coords[i] = static_cast<int>(v < 0 ? v + factors_[i] : v);
    }
    return r;
  }

  /// Least k >= 1 with k*a = 0.
  int order_of(const Element& a) const {
    validate(a);
    int o = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      const int c = factors_[i] / std::gcd(factors_[i], a.coords[i]);
      o = std::lcm(o, c);
    }
    return o;
  }

  // Index-level arithmetic for hot loops; no validation.
  std::size_t add_index(std::size_t a, std::size_t b) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::size_t f = static_cast<std::size_t>(factors_[i]);
      const std::size_t da = (a / strides_[i]) % f;
      const std::size_t db = (b / strides_[i]) % f;
      r += ((da + db) % f) * strides_[i];
    }
    return r;
  }

  std::size_t neg_index(std::size_t a) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::size_t f = static_cast<std::size_t>(factors_[i]);
      const std::size_t da = (a / strides_[i]) % f;
      r += ((f - da) % f) * strides_[i];
    }
    return r;
  }

  std::size_t sub_index(std::size_t a, std::size_t b) const { return add_index(a, neg_index(b)); }

 private:
  std::vector<int> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
};

inline AbelianGroup make_group(const std::vector<int>& factors) { return AbelianGroup(factors); }

/// Element set of the subgroup generated by `gens`, sorted.
inline std::vector<Element> generated_subgroup(const AbelianGroup& group, const std::vector<Element>& gens) {
  std::vector<std::size_t> gen_idx;
  for (const Element& g : gens) gen_idx.push_back(group.index_of(g));
  // In a finite group, closure under adding the generators is closure under the group operations.
  std::vector<char> in(group.order(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t g : gen_idx) {
      const std::size_t next = group.add_index(members[head], g);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::vector<Element> out;
  out.reserve(members.size());
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (in[i]) out.push_back(group.element_at(i));
  }
  return out;
}

inline std::size_t generated_subgroup_order(const AbelianGroup& group, const std::vector<Element>& gens) {
  return generated_subgroup(group, gens).size();
}

/// An automorphism of a product of cyclic groups, fixed by the images of the
/// standard generators. The full element map is materialised on construction.
class GroupAutomorphism {
 public:
  /// Throws InvalidArgumentError unless the images define a bijective endomorphism.
  static GroupAutomorphism from_images(const AbelianGroup& group, std::vector<Element> images) {
    if (images.size() != group.rank()) {
      throw InvalidArgumentError("automorphism needs one image per cyclic factor");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (group.factors()[i] % group.order_of(images[i]) != 0) {
        throw InvalidArgumentError("image " + to_string(images[i]) + " of generator " + std::to_string(i) +
                                   " has order not dividing " + std::to_string(group.factors()[i]));
      }
    }
    GroupAutomorphism a;
    a.images_ = std::move(images);
    a.map_.resize(group.order());
    std::vector<std::size_t> img_idx;
    for (const auto& e : a.images_) img_idx.push_back(group.index_of(e));
    std::vector<char> hit(group.order(), 0);
    for (std::size_t x = 0; x < group.order(); ++x) {
      const Element ex = group.element_at(x);
      std::size_t y = 0;
      for (std::size_t i = 0; i < group.rank(); ++i) {
        for (int c = 0; c < ex.coords[i]; ++c) y = group.add_index(y, img_idx[i]);
      }
      a.map_[x] = y;
      if (hit[y]) throw InvalidArgumentError("generator images do not define an injective map");
      hit[y] = 1;
    }
    return a;
  }

  const std::vector<Element>& images() const noexcept { return images_; }

  /// Element map on dense indices.
  const std::vector<std::size_t>& index_map() const noexcept { return map_; }

  std::size_t apply_index(std::size_t x) const { return map_.at(x); }

  Element apply(const AbelianGroup& group, const Element& x) const {
    return group.element_at(map_.at(group.index_of(x)));
  }

  friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.map_ == b.map_; }

 private:
  GroupAutomorphism() = default;
  std::vector<Element> images_;
  std::vector<std::size_t> map_;
};

inline constexpr std::size_t kDefaultAutCap = 100'000;

/// Aut(G) by backtracking over the images of the standard generators. The image
/// of generator i must have order dividing n_i, and the images chosen so far must
/// generate a subgroup of order n_1 * ... * n_i (injectivity on the partial
/// product). Output is in lexicographic order of the image tuples. Throws
/// ResourceLimitError once more than `cap` automorphisms have been found.
inline std::vector<GroupAutomorphism> enumerate_automorphisms(const AbelianGroup& group,
                                                               std::size_t cap = kDefaultAutCap) {
  const std::size_t r = group.rank();
  std::vector<std::vector<std::size_t>> candidates(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t x = 0; x < group.order(); ++x) {
      if (group.factors()[i] % group.order_of(group.element_at(x)) == 0) candidates[i].push_back(x);
    }
  }

  std::vector<GroupAutomorphism> out;
  std::vector<std::size_t> chosen(r);
  // subgroup[i] = membership mask of the subgroup generated by the first i images
  std::vector<std::vector<char>> subgroup(r + 1, std::vector<char>(group.order(), 0));
  std::vector<std::size_t> sizes(r + 1, 1);
  subgroup[0][0] = 1;

  auto extend = [&](std::size_t level, std::size_t gen) {
    auto& next = subgroup[level + 1];
    next = subgroup[level];
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < group.order(); ++x) {
      if (next[x]) members.push_back(x);
    }
    const std::size_t base = members.size();
    // cosets h + k*gen
    std::size_t step = gen;
    while (!next[step]) {
      for (std::size_t j = 0; j < base; ++j) {
        const std::size_t y = group.add_index(members[j], step);
        if (!next[y]) {
          next[y] = 1;
          members.push_back(y);
        }
      }
      step = group.add_index(step, gen);
    }
    sizes[level + 1] = members.size();
  };

  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == r) {
      if (out.size() == cap) {
        throw ResourceLimitError("Aut(" + group.to_string() + ") has more than " + std::to_string(cap) +
                                 " automorphisms");
      }
      std::vector<Element> images;
      for (std::size_t i = 0; i < r; ++i) images.push_back(group.element_at(chosen[i]));
      out.push_back(GroupAutomorphism::from_images(group, std::move(images)));
      return;
    }
    for (std::size_t c : candidates[level]) {
      extend(level, c);
      if (sizes[level + 1] != sizes[level] * static_cast<std::size_t>(group.factors()[level])) continue;
      chosen[level] = c;
      self(self, level + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

namespace detail {

inline void partitions_of(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// All partitions of n, parts descending, partitions in reverse-lexicographic order.
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::partitions_of(n, n, cur, out);
  return out;
}

/// One representative per isomorphism class of abelian groups of order n, each
/// stored with descending invariant factors (Z8, Z4xZ2, Z2xZ2xZ2, ...).
inline std::vector<AbelianGroup> enumerate_abelian_groups(int n) {
  if (n < 1) throw InvalidArgumentError("group order must be >= 1");
  const auto primes = detail::factorize(n);
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, k] : primes) per_prime.push_back(integer_partitions(k));

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) len = std::max(len, per_prime[i][pick[i]].size());
    std::vector<int> factors(len, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& parts = per_prime[i][pick[i]];
      for (std::size_t j = 0; j < parts.size(); ++j) factors[j] *= detail::ipow(primes[i].first, parts[j]);
    }
    out.emplace_back(std::move(factors));

    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (primes.empty()) return out;
  }
}

}  // namespace semicayley
