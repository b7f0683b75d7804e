#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "pyramidal/error.hpp"

namespace pyr {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image array.
///
/// Products act on the right: (a * b)[i] == b[a[i]], i.e. apply a first,
/// then b. Conjugation x^g is g^-1 * x * g.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw Error(Errc::invalid_argument, "image array is not a bijection");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(Unchecked{}, std::move(images));
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<std::vector<Point>> list;
    for (const auto& c : cycles) list.emplace_back(c);
    return from_cycles(degree, list);
  }

  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> touched(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point from = cycle[i];
        const Point to = cycle[(i + 1) % cycle.size()];
        if (from >= degree || to >= degree || touched[from])
          throw Error(Errc::invalid_argument, "cycles are not disjoint or point out of range");
        touched[from] = true;
        images[from] = to;
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree()) throw Error(Errc::degree_mismatch, "product of permutations of different degree");
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
    return Permutation(Unchecked{}, std::move(out));
  }

  Permutation inverse() const {
    std::vector<Point> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
    return Permutation(Unchecked{}, std::move(out));
  }

  Permutation pow(long long exponent) const {
    Permutation base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                        : static_cast<unsigned long long>(exponent);
    Permutation result = identity(degree());
    while (e != 0) {
      if (e & 1ULL) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const {
    std::vector<Point> out(images_.size());
    // (g^-1 x g)[g[i]] = g[x[i]]
    for (std::size_t i = 0; i < images_.size(); ++i) out[g.images_[i]] = g.images_[images_[i]];
    return Permutation(Unchecked{}, std::move(out));
  }

  bool commutes_with(const Permutation& other) const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (other.images_[images_[i]] != images_[other.images_[i]]) return false;
    return true;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool is_involution() const noexcept {
    bool moved = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[images_[i]] != i) return false;
      moved = moved || images_[i] != i;
    }
    return moved;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::vector<Point> fixed_points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] == i) out.push_back(static_cast<Point>(i));
    return out;
  }

  std::string to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      any = true;
      os << '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) os << ' ';
        os << j;
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  bool operator==(const Permutation&) const = default;
  // Lexicographic on image sequences; this is the canonical element order.
  std::strong_ordering operator<=>(const Permutation& rhs) const {
    return std::lexicographical_compare_three_way(images_.begin(), images_.end(), rhs.images_.begin(),
                                                  rhs.images_.end());
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pyr
