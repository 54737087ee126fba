#pragma once

#include <vector>

#include "charkit/cyclotomic.hpp"
#include "charkit/perm_group.hpp"

namespace charkit {

/// A function on the conjugacy classes of a specific group, one value per
/// class in the group's class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  /// Throws DomainError if the value count differs from the class count.
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction trivial(GroupPtr group);
  /// The character of the regular representation.
  static ClassFunction regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](std::size_t cls) const { return values_[cls]; }
  std::size_t size() const { return values_.size(); }
  /// Value at the identity class.
  const Cyclotomic& degree() const { return values_.front(); }
  bool is_zero() const;

  ClassFunction conj() const;
  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator*=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scale);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  /// Pointwise product.
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  void require_same_group(const ClassFunction& other) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// [a, b] = (1/|G|) sum over classes |C| a(C) conj(b(C)). Throws
/// DomainError when a and b live on different groups.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// [a, a] as a rational; a*conj(a) is always rational.
Rational norm(const ClassFunction& a);

}  // namespace charkit
