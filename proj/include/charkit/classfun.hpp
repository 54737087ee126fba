#pragma once

#include <cstddef>
#include <vector>

#include "charkit/chartab.hpp"
#include "charkit/class_function.hpp"
#include "charkit/subgroup.hpp"

namespace charkit {

/// chi_H: chi (a class function of h.parent()) read through the class fusion
/// of H. The result lives on h.group().
ClassFunction restrict(const ClassFunction& chi, const SubgroupRecord& h);

/// theta^G for theta on h.group(), evaluated class by class:
/// theta^G(g) = |C_G(g)| / |H| * sum over H-classes D fusing into the class
/// of g of |D| theta(D).
ClassFunction induce(const ClassFunction& theta, const SubgroupRecord& h);

/// Multiplicities of the irreducibles of `table` in chi. Throws
/// NotACharacter unless every multiplicity is a nonnegative integer.
std::vector<std::size_t> decompose(const ClassFunction& chi, const CharacterTable& table);

/// Number of distinct irreducible constituents of chi.
std::size_t constituent_count(const ClassFunction& chi, const CharacterTable& table);

/// V(chi): the subgroup generated by the elements x with chi(x) != 0.
/// Always normal. Throws DomainError for the zero function.
SubgroupRecord vanishing_off_subgroup(const ClassFunction& chi);

/// Irr(G/H) inside Irr(G): the linear rows whose kernel contains H, as row
/// indices of `table`. Requires G' <= H; throws DomainError otherwise.
std::vector<std::size_t> linear_rows_over(const CharacterTable& table, const SubgroupRecord& h);

/// Same set as linear_rows_over, as class functions.
std::vector<ClassFunction> linear_characters_with_kernel_containing(const CharacterTable& table,
                                                                    const SubgroupRecord& h);

/// Orbit and stabilizer of chi under multiplication by Irr(G/H).
struct OrbitData {
  ClassFunction base;
  std::vector<std::size_t> acting;      // rows of the table forming Irr(G/H)
  std::vector<ClassFunction> orbit;     // distinct products, in acting order
  std::vector<std::size_t> orbit_rows;  // table rows of the orbit members
  std::vector<std::size_t> stabilizer;  // the acting rows fixing chi
};

/// Requires G' <= H and chi irreducible (a row of `table`).
OrbitData orbit_and_stabilizer(const ClassFunction& chi, const SubgroupRecord& h,
                               const CharacterTable& table);

}  // namespace charkit
