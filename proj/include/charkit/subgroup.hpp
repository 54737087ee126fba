#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "charkit/perm_group.hpp"

namespace charkit {

/// A subgroup of an enumerated parent group, held as the sorted list of
/// parent element indices.
///
/// Cheap to copy: copies share the element data and the lazily computed
/// standalone group, class fusion and maximality flag.
class SubgroupRecord {
 public:
  /// Subgroup generated by the given parent element indices.
  static SubgroupRecord generated_by(GroupPtr parent, std::span<const std::size_t> seed);
  static SubgroupRecord whole(GroupPtr parent);
  static SubgroupRecord trivial(GroupPtr parent);

  const GroupPtr& parent() const { return impl_->parent; }
  const std::vector<std::size_t>& elements() const { return impl_->elements; }
  const std::vector<bool>& mask() const { return impl_->mask; }
  std::size_t order() const { return impl_->elements.size(); }
  bool is_normal() const { return impl_->is_normal; }
  bool contains(std::size_t element) const { return impl_->mask[element]; }
  bool is_whole() const { return order() == impl_->parent->order(); }
  bool is_subgroup_of(const SubgroupRecord& other) const;
  /// A small generating set (parent element indices).
  const std::vector<std::size_t>& generators() const { return impl_->generators; }

  /// The subgroup as a permutation group in its own right, on the parent's
  /// points. The whole group maps to the parent itself.
  const GroupPtr& group() const;
  /// Class fusion: class id in group() -> class id in parent().
  const std::vector<std::size_t>& fusion() const;
  /// Parent element index of each element of group().
  std::size_t to_parent(std::size_t local_element) const;
  /// True iff proper and not contained in any other proper subgroup.
  bool is_maximal() const;

  friend bool operator==(const SubgroupRecord& a, const SubgroupRecord& b) {
    return a.impl_->parent == b.impl_->parent && a.impl_->elements == b.impl_->elements;
  }

 private:
  struct Impl {
    GroupPtr parent;
    std::vector<std::size_t> elements;
    std::vector<bool> mask;
    std::vector<std::size_t> generators;
    bool is_normal = false;

    mutable std::once_flag group_once;
    mutable GroupPtr group;
    mutable std::once_flag fusion_once;
    mutable std::vector<std::size_t> fusion;
    mutable std::vector<std::size_t> local_to_parent;
    mutable std::once_flag maximal_once;
    mutable bool maximal = false;
  };

  explicit SubgroupRecord(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void ensure_fusion() const;

  std::shared_ptr<const Impl> impl_;
};

/// Closure of seed under multiplication, as sorted parent indices.
std::vector<std::size_t> closure(const PermGroup& g, std::span<const std::size_t> seed);

/// Smallest subgroup containing the given permutations. Throws DomainError
/// if one of them is not in G. An empty seed yields the trivial subgroup.
SubgroupRecord generated_subgroup(const GroupPtr& g, std::span<const Perm> seed);

/// Smallest normal subgroup containing the seed.
SubgroupRecord normal_closure(const GroupPtr& g, std::span<const std::size_t> seed);

/// Join of two subgroups of the same parent.
SubgroupRecord join(const SubgroupRecord& a, const SubgroupRecord& b);

/// All conjugates g^-1 H g, as membership masks, without duplicates.
std::vector<std::vector<bool>> conjugate_masks(const SubgroupRecord& h);

struct DerivedSeries {
  /// G, G', G'', ... down to the first repeated term (listed once).
  std::vector<SubgroupRecord> series;
  bool metabelian = false;
  std::size_t abelianization_index = 1;

  const SubgroupRecord& derived_subgroup() const {
    return series.size() > 1 ? series[1] : series[0];
  }
};

DerivedSeries derived_series(const GroupPtr& g);

/// One representative per conjugacy class of subgroups, sorted by
/// (order, sorted element list); the representative is the conjugate with
/// the lexicographically least element list. Throws CapExceeded above
/// config().subgroup_cap.
std::vector<SubgroupRecord> subgroups_up_to_conjugacy(const GroupPtr& g);

/// Every normal subgroup, sorted by (order, element list). No subgroup cap.
std::vector<SubgroupRecord> normal_subgroups(const GroupPtr& g);

/// Every subgroup H with N <= H <= G, for N normal in G, obtained by pulling
/// back the subgroup lattice of G/N. Sorted by (order, element list).
std::vector<SubgroupRecord> overgroups_of_normal(const SubgroupRecord& n);

/// Class fusion map of H into G (H-class id -> G-class id).
std::vector<std::size_t> class_fusion(const GroupPtr& g, const SubgroupRecord& h);

}  // namespace charkit
