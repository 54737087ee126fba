#include "charkit/class_function.hpp"

#include "charkit/errors.hpp"

namespace charkit {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_ || values_.size() != group_->classes().size()) {
    throw DomainError("class function needs one value per conjugacy class");
  }
}

ClassFunction ClassFunction::trivial(GroupPtr group) {
  const std::size_t n = group->classes().size();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(n, Cyclotomic(1)));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Cyclotomic> values(group->classes().size(), Cyclotomic(0));
  values[0] = Cyclotomic(static_cast<long>(group->order()));
  return ClassFunction(std::move(group), std::move(values));
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

void ClassFunction::require_same_group(const ClassFunction& other) const {
  if (group_ != other.group_) throw DomainError("class functions live on different groups");
}

ClassFunction ClassFunction::conj() const {
  ClassFunction out = *this;
  for (auto& v : out.values_) v = v.conj();
  return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& other) {
  require_same_group(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw DomainError("inner product of functions on different groups");
  const auto& classes = a.group()->classes();
  CyclotomicAccumulator acc(static_cast<std::uint32_t>(a.group()->exponent()));
  const Rational order(static_cast<unsigned long>(a.group()->order()));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Rational weight = Rational(static_cast<unsigned long>(classes[c].size)) / order;
    acc.add_product(a[c], b[c], weight, /*conj_b=*/true);
  }
  return acc.result();
}

Rational norm(const ClassFunction& a) {
  auto value = inner_product(a, a).as_rational();
  if (!value) throw Error("norm: [a, a] is not rational");
  return *value;
}

}  // namespace charkit
