#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charkit {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as the image list.
///
/// Composition is left-to-right: (a * b)(x) = b(a(x)), i.e. the left factor
/// is applied first. Cycle notation uses 1-based points, so "(1 2)(2 3)"
/// is the product of (1 2) followed by (2 3), which equals (1 3 2).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws DomainError unless images is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }
  /// Parses one product of cycles, e.g. "(1 2 3)(4 5)" or "()". The degree
  /// is max(degree, largest point mentioned).
  static Perm parse_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return x < images_.size() ? images_[x] : x; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Same permutation on a larger point set.
  Perm extended(std::size_t degree) const;
  std::uint64_t order() const;
  Perm pow(std::int64_t k) const;

  /// Disjoint-cycle form with 1-based points; "()" for the identity.
  std::string to_cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<Point> images_;
};

/// x^g = g^-1 x g.
Perm conjugate(const Perm& x, const Perm& g);
/// [a, b] = a^-1 b^-1 a b.
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace charkit
