#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charkit/class_function.hpp"
#include "charkit/perm_group.hpp"

namespace charkit {

/// a[i][j][k]: number of pairs (x, y) with x in class i, y in class j and
/// x*y equal to a fixed element of class k.
using ClassMultTensor = std::vector<std::vector<std::vector<std::uint64_t>>>;

ClassMultTensor class_mult_coefficients(const PermGroup& g);

/// The irreducible characters of a group.
///
/// Row 0 is the trivial character; the other rows are sorted by degree and
/// then lexicographically by the text rendering of their values.
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> rows);

  const GroupPtr& group() const { return group_; }
  const std::vector<ConjugacyClass>& classes() const { return group_->classes(); }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const ClassFunction& operator[](std::size_t i) const { return rows_[i]; }
  std::size_t size() const { return rows_.size(); }
  std::uint64_t exponent() const { return group_->exponent(); }

  std::size_t degree(std::size_t row) const { return degrees_[row]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::optional<std::size_t> index_of(const ClassFunction& chi) const;
  /// Indices of the degree-one rows.
  std::vector<std::size_t> linear_rows() const;

  /// Verifies every table invariant exactly (row count, sum of squared
  /// degrees, both orthogonality relations, degree divisibility, conductor
  /// of every value). Throws TableError on the first violation.
  void check() const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> rows_;
  std::vector<std::size_t> degrees_;
};

/// Dixon-Schneider: simultaneous eigenvectors of the class matrices over
/// F_p, lifted to exact cyclotomic values. Uses group->config().seed unless
/// a seed is given. The result has passed check().
CharacterTable character_table(const GroupPtr& group);
CharacterTable character_table(const GroupPtr& group, std::uint64_t seed);

/// Smallest prime p with p = 1 mod exponent and p > 2*sqrt(order).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

}  // namespace charkit
