#include "charkit/classify.hpp"

#include "charkit/errors.hpp"

namespace charkit {

GroupAnalysis::GroupAnalysis(GroupPtr group)
    : group_(std::move(group)), whole_(SubgroupRecord::whole(group_)) {}

const CharacterTable& GroupAnalysis::table() const { return table_of(whole_); }

const DerivedSeries& GroupAnalysis::derived() const {
  std::call_once(derived_once_,
                 [this] { derived_ = std::make_unique<DerivedSeries>(derived_series(group_)); });
  return *derived_;
}

const std::vector<SubgroupRecord>& GroupAnalysis::normal_subgroups() const {
  std::call_once(normal_once_, [this] { normal_ = charkit::normal_subgroups(group_); });
  return normal_;
}

const std::vector<SubgroupRecord>& GroupAnalysis::derived_overgroups() const {
  std::call_once(overgroups_once_,
                 [this] { overgroups_ = overgroups_of_normal(derived_subgroup()); });
  return overgroups_;
}

const std::vector<SubgroupRecord>& GroupAnalysis::subgroup_classes() const {
  std::call_once(census_once_, [this] {
    auto census = subgroups_up_to_conjugacy(group_);
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < census.size(); ++i) {
      if (census[i].is_maximal()) maximal.push_back(i);
    }
    census_ = std::move(census);
    maximal_ = std::move(maximal);
  });
  return census_;
}

const std::vector<std::size_t>& GroupAnalysis::maximal_subgroups() const {
  subgroup_classes();
  return maximal_;
}

const CharacterTable& GroupAnalysis::table_of(const SubgroupRecord& h) const {
  if (h.parent() != group_) throw DomainError("table_of: subgroup of a different group");
  const GroupPtr& sub = h.group();
  std::lock_guard lock(tables_mutex_);
  auto it = tables_.find(sub.get());
  if (it == tables_.end()) {
    auto table = std::make_unique<CharacterTable>(character_table(sub));
    it = tables_.emplace(sub.get(), std::make_pair(sub, std::move(table))).first;
  }
  return *it->second.second;
}

namespace {

std::size_t degree_of(const ClassFunction& chi) {
  auto d = chi.degree().as_rational();
  if (!d || d->get_den() != 1 || *d <= 0) throw NotACharacter("degree is not a positive integer");
  return d->get_num().get_ui();
}

bool induced_from(const ClassFunction& chi, std::size_t chi_degree, const SubgroupRecord& h,
                  const GroupAnalysis& ctx) {
  const std::size_t index = ctx.group()->order() / h.order();
  if (chi_degree % index != 0) return false;
  const CharacterTable& sub = ctx.table_of(h);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub.degree(i) * index != chi_degree) continue;
    if (induce(sub[i], h) == chi) return true;
  }
  return false;
}

}  // namespace

bool is_primitive(const ClassFunction& chi, const GroupAnalysis& ctx, PrimitivitySearch search) {
  const std::size_t d = degree_of(chi);
  const auto& census = ctx.subgroup_classes();
  if (search == PrimitivitySearch::kMaximalSubgroups) {
    for (auto i : ctx.maximal_subgroups()) {
      if (induced_from(chi, d, census[i], ctx)) return false;
    }
    return true;
  }
  for (const auto& h : census) {
    if (!h.is_whole() && induced_from(chi, d, h, ctx)) return false;
  }
  return true;
}

bool is_quasi_primitive(const ClassFunction& chi, const GroupAnalysis& ctx) {
  for (const auto& n : ctx.normal_subgroups()) {
    if (constituent_count(restrict(chi, n), ctx.table_of(n)) != 1) return false;
  }
  return true;
}

bool has_full_vanishing_off(const ClassFunction& chi, const GroupAnalysis& ctx) {
  return join(vanishing_off_subgroup(chi), ctx.derived_subgroup()).is_whole();
}

std::optional<MonomialWitness> monomial_witness(const ClassFunction& chi,
                                                const GroupAnalysis& ctx) {
  const std::size_t d = degree_of(chi);
  const auto& census = ctx.subgroup_classes();
  for (std::size_t i = 0; i < census.size(); ++i) {
    if (census[i].order() * d != ctx.group()->order()) continue;
    const CharacterTable& sub = ctx.table_of(census[i]);
    for (auto row : sub.linear_rows()) {
      if (induce(sub[row], census[i]) == chi) return MonomialWitness{i, row};
    }
  }
  return std::nullopt;
}

const std::vector<bool>& GroupAnalysis::primitive_flags() const {
  std::call_once(primitive_once_, [this] {
    std::vector<bool> flags;
    for (const auto& chi : table().rows()) flags.push_back(is_primitive(chi, *this));
    primitive_ = std::move(flags);
  });
  return primitive_;
}

const std::vector<bool>& GroupAnalysis::quasi_primitive_flags() const {
  std::call_once(quasi_once_, [this] {
    std::vector<bool> flags;
    for (const auto& chi : table().rows()) flags.push_back(is_quasi_primitive(chi, *this));
    quasi_ = std::move(flags);
  });
  return quasi_;
}

const std::vector<bool>& GroupAnalysis::full_vanishing_off_flags() const {
  std::call_once(full_once_, [this] {
    std::vector<bool> flags;
    for (const auto& chi : table().rows()) flags.push_back(has_full_vanishing_off(chi, *this));
    full_ = std::move(flags);
  });
  return full_;
}

std::vector<std::string> ClassificationReport::invariant_violations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const std::string row = "row " + std::to_string(i);
    if (r.primitive && !r.quasi_primitive) out.push_back(row + ": primitive but not quasi-primitive");
    if (r.quasi_primitive && !r.full_vanishing_off) {
      out.push_back(row + ": quasi-primitive but V(chi)G' != G");
    }
    if (r.degree == 1 && !(r.primitive && r.quasi_primitive && r.full_vanishing_off && r.monomial)) {
      out.push_back(row + ": linear character failed a test");
    }
  }
  if (primitive_count % derived_index != 0) out.push_back("|G:G'| does not divide |Irr_pri|");
  if (quasi_primitive_count % derived_index != 0) out.push_back("|G:G'| does not divide |Irr_qua|");
  return out;
}

ClassificationReport classify_group(const GroupAnalysis& ctx) {
  ClassificationReport report;
  report.group = ctx.group()->name();
  report.order = ctx.group()->order();
  report.derived_index = ctx.derived().abelianization_index;
  const CharacterTable& table = ctx.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const ClassFunction& chi = table[i];
    RowClassification row;
    row.degree = table.degree(i);
    row.primitive = ctx.primitive_flags()[i];
    row.quasi_primitive = ctx.quasi_primitive_flags()[i];
    row.full_vanishing_off = ctx.full_vanishing_off_flags()[i];
    row.monomial = monomial_witness(chi, ctx);
    report.primitive_count += row.primitive;
    report.quasi_primitive_count += row.quasi_primitive;
    report.full_vanishing_off_count += row.full_vanishing_off;
    report.rows.push_back(row);
  }
  if (auto violations = report.invariant_violations(); !violations.empty()) {
    throw Error("classification report invariant failed for " + report.group + ": " +
                violations.front());
  }
  return report;
}

ClassificationReport classify_group(const GroupPtr& group) {
  return classify_group(GroupAnalysis(group));
}

}  // namespace charkit
