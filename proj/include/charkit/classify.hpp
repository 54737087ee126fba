#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "charkit/chartab.hpp"
#include "charkit/classfun.hpp"
#include "charkit/subgroup.hpp"

namespace charkit {

/// Shared, lazily built data about one group: its table, derived series,
/// normal subgroups, subgroup census and the tables of subgroups. Every
/// accessor is thread-safe; results are cached for the lifetime of the
/// object.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const CharacterTable& table() const;
  const DerivedSeries& derived() const;
  const SubgroupRecord& derived_subgroup() const { return derived().derived_subgroup(); }
  const std::vector<SubgroupRecord>& normal_subgroups() const;
  /// Subgroups H with G' <= H <= G.
  const std::vector<SubgroupRecord>& derived_overgroups() const;
  /// Census up to conjugacy; throws CapExceeded above the subgroup cap.
  const std::vector<SubgroupRecord>& subgroup_classes() const;
  /// Indices into subgroup_classes() of the maximal subgroups.
  const std::vector<std::size_t>& maximal_subgroups() const;
  /// Character table of h.group(), computed once per subgroup.
  const CharacterTable& table_of(const SubgroupRecord& h) const;

  /// Per-row flags of table(), computed once. primitive_flags() needs the
  /// subgroup census.
  const std::vector<bool>& primitive_flags() const;
  const std::vector<bool>& quasi_primitive_flags() const;
  const std::vector<bool>& full_vanishing_off_flags() const;

 private:
  GroupPtr group_;
  SubgroupRecord whole_;

  mutable std::once_flag derived_once_;
  mutable std::unique_ptr<DerivedSeries> derived_;
  mutable std::once_flag normal_once_;
  mutable std::vector<SubgroupRecord> normal_;
  mutable std::once_flag overgroups_once_;
  mutable std::vector<SubgroupRecord> overgroups_;
  mutable std::once_flag census_once_;
  mutable std::vector<SubgroupRecord> census_;
  mutable std::vector<std::size_t> maximal_;

  mutable std::once_flag primitive_once_;
  mutable std::vector<bool> primitive_;
  mutable std::once_flag quasi_once_;
  mutable std::vector<bool> quasi_;
  mutable std::once_flag full_once_;
  mutable std::vector<bool> full_;

  mutable std::mutex tables_mutex_;
  mutable std::map<const PermGroup*, std::pair<GroupPtr, std::unique_ptr<CharacterTable>>>
      tables_;
};

enum class PrimitivitySearch {
  kMaximalSubgroups,  // induction is transitive, so maximal subgroups suffice
  kAllSubgroups,      // cross-check oracle
};

/// False iff chi = theta^G for an irreducible theta of a proper subgroup.
bool is_primitive(const ClassFunction& chi, const GroupAnalysis& ctx,
                  PrimitivitySearch search = PrimitivitySearch::kMaximalSubgroups);

/// True iff chi_N has exactly one distinct irreducible constituent for every
/// normal subgroup N.
bool is_quasi_primitive(const ClassFunction& chi, const GroupAnalysis& ctx);

/// True iff V(chi) G' = G.
bool has_full_vanishing_off(const ClassFunction& chi, const GroupAnalysis& ctx);

/// (H, lambda) with lambda linear on H, |G:H| = chi(1) and lambda^G = chi.
struct MonomialWitness {
  std::size_t subgroup = 0;   // index into GroupAnalysis::subgroup_classes()
  std::size_t character = 0;  // row of the subgroup's table
};

std::optional<MonomialWitness> monomial_witness(const ClassFunction& chi,
                                                const GroupAnalysis& ctx);

struct RowClassification {
  std::size_t degree = 1;
  bool primitive = false;
  bool quasi_primitive = false;
  bool full_vanishing_off = false;
  std::optional<MonomialWitness> monomial;
};

struct ClassificationReport {
  std::string group;
  std::uint64_t order = 1;
  std::size_t derived_index = 1;  // |G:G'|
  std::vector<RowClassification> rows;
  std::size_t primitive_count = 0;
  std::size_t quasi_primitive_count = 0;
  std::size_t full_vanishing_off_count = 0;

  /// Descriptions of violated report invariants (implication chain,
  /// divisibility of the counts by |G:G'|, linear rows passing every test).
  std::vector<std::string> invariant_violations() const;
};

/// Classifies every irreducible. Throws CapExceeded when the subgroup census
/// is unavailable, and Error if a report invariant fails.
ClassificationReport classify_group(const GroupAnalysis& ctx);
ClassificationReport classify_group(const GroupPtr& group);

}  // namespace charkit
