#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "semicayley/errors.hpp"

namespace semicayley {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image array. Points act on the
/// right: compose(a, b) applies a first, then b.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) throw InvalidArgumentError("image array is not a bijection");
      seen[p] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im), Unchecked{});
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point{0});
    std::vector<char> used(n, 0);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Point a = cyc[i];
        if (a >= n || used[a]) throw InvalidArgumentError("cycles are not disjoint or out of range");
        used[a] = 1;
        im[a] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(im), Unchecked{});
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  Point apply(Point p) const { return images_.at(p); }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  /// Smallest moved point, or degree() if none.
  std::size_t first_moved() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return i;
    }
    return images_.size();
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv), Unchecked{});
  }

  /// `*this` followed by `other`.
  Permutation then(const Permutation& other) const {
    if (other.degree() != degree()) {
      throw InvalidArgumentError("degree mismatch: " + std::to_string(degree()) + " vs " +
                                 std::to_string(other.degree()));
    }
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = other.images_[images_[i]];
    return Permutation(std::move(out), Unchecked{});
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }

  /// b^-1 a b
  Permutation conjugate_by(const Permutation& b) const { return b.inverse().then(*this).then(b); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      out += '(';
      std::size_t p = start;
      bool first = true;
      while (!seen[p]) {
        seen[p] = 1;
        if (!first) out += ' ';
        out += std::to_string(p);
        first = false;
        p = images_[p];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a.then(b); }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace semicayley
