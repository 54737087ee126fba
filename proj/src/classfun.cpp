#include "charkit/classfun.hpp"

#include <algorithm>

#include "charkit/errors.hpp"

namespace charkit {

namespace {

// H contains G' iff H is normal and holds every commutator of generators.
bool contains_derived_subgroup(const SubgroupRecord& h) {
  if (!h.is_normal()) return false;
  const auto& g = *h.parent();
  for (auto a : g.generator_indices()) {
    for (auto b : g.generator_indices()) {
      if (!h.contains(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))) return false;
    }
  }
  return true;
}

}  // namespace

ClassFunction restrict(const ClassFunction& chi, const SubgroupRecord& h) {
  if (chi.group() != h.parent()) throw DomainError("restrict: H is not a subgroup of chi's group");
  const auto& fusion = h.fusion();
  std::vector<Cyclotomic> values;
  values.reserve(fusion.size());
  for (auto c : fusion) values.push_back(chi[c]);
  return ClassFunction(h.group(), std::move(values));
}

ClassFunction induce(const ClassFunction& theta, const SubgroupRecord& h) {
  if (theta.group() != h.group()) throw DomainError("induce: theta does not live on H");
  const auto& g = *h.parent();
  const auto& g_classes = g.classes();
  const auto& h_classes = h.group()->classes();
  const auto& fusion = h.fusion();
  const auto e = static_cast<std::uint32_t>(g.exponent());
  std::vector<CyclotomicAccumulator> sums(g_classes.size(), CyclotomicAccumulator(e));
  for (std::size_t d = 0; d < h_classes.size(); ++d) {
    sums[fusion[d]].add(theta[d], Rational(static_cast<unsigned long>(h_classes[d].size)));
  }
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < g_classes.size(); ++c) {
    Cyclotomic v = sums[c].result();
    Rational scale(static_cast<unsigned long>(g_classes[c].centralizer_order),
                   static_cast<unsigned long>(h.order()));
    scale.canonicalize();
    v *= scale;
    values.push_back(std::move(v));
  }
  return ClassFunction(h.parent(), std::move(values));
}

std::vector<std::size_t> decompose(const ClassFunction& chi, const CharacterTable& table) {
  std::vector<std::size_t> out;
  for (const auto& row : table.rows()) {
    auto m = inner_product(chi, row).as_rational();
    if (!m || m->get_den() != 1 || *m < 0) {
      throw NotACharacter("decompose: multiplicity is not a nonnegative integer");
    }
    out.push_back(m->get_num().get_ui());
  }
  return out;
}

std::size_t constituent_count(const ClassFunction& chi, const CharacterTable& table) {
  const auto m = decompose(chi, table);
  return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](auto x) { return x > 0; }));
}

SubgroupRecord vanishing_off_subgroup(const ClassFunction& chi) {
  if (chi.is_zero()) throw DomainError("vanishing_off_subgroup: zero class function");
  const auto& g = chi.group();
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    if (!chi[c].is_zero()) reps.push_back(g->classes()[c].rep_index);
  }
  return normal_closure(g, reps);
}

std::vector<std::size_t> linear_rows_over(const CharacterTable& table, const SubgroupRecord& h) {
  if (h.parent() != table.group()) throw DomainError("subgroup of a different group");
  if (!contains_derived_subgroup(h)) throw DomainError("H does not contain the derived subgroup");
  const auto& g = *table.group();
  std::vector<bool> meets(table.classes().size(), false);
  for (auto x : h.elements()) meets[g.class_of(x)] = true;
  std::vector<std::size_t> out;
  for (auto i : table.linear_rows()) {
    bool trivial_on_h = true;
    for (std::size_t c = 0; c < meets.size(); ++c) {
      if (meets[c] && table[i][c] != Cyclotomic(1)) {
        trivial_on_h = false;
        break;
      }
    }
    if (trivial_on_h) out.push_back(i);
  }
  if (out.size() * h.order() != g.order()) {
    throw Error("linear characters over H: expected |G:H| of them");
  }
  return out;
}

std::vector<ClassFunction> linear_characters_with_kernel_containing(const CharacterTable& table,
                                                                    const SubgroupRecord& h) {
  std::vector<ClassFunction> out;
  for (auto i : linear_rows_over(table, h)) out.push_back(table[i]);
  return out;
}

OrbitData orbit_and_stabilizer(const ClassFunction& chi, const SubgroupRecord& h,
                               const CharacterTable& table) {
  OrbitData data;
  data.base = chi;
  data.acting = linear_rows_over(table, h);
  for (auto l : data.acting) {
    ClassFunction product = table[l] * chi;
    if (product == chi) data.stabilizer.push_back(l);
    if (std::find(data.orbit.begin(), data.orbit.end(), product) != data.orbit.end()) continue;
    auto row = table.index_of(product);
    if (!row) throw DomainError("orbit_and_stabilizer: chi is not irreducible");
    data.orbit_rows.push_back(*row);
    data.orbit.push_back(std::move(product));
  }
  return data;
}

}  // namespace charkit
