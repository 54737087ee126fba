#include "charkit/subgroup.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "charkit/errors.hpp"

namespace charkit {

namespace {

std::vector<bool> to_mask(std::size_t n, std::span<const std::size_t> elements) {
  std::vector<bool> mask(n, false);
  for (auto x : elements) mask[x] = true;
  return mask;
}

std::vector<std::size_t> greedy_generators(const PermGroup& g,
                                           const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> gens;
  std::vector<bool> covered(g.order(), false);
  covered[0] = true;
  std::size_t covered_count = 1;
  for (auto x : elements) {
    if (covered_count == elements.size()) break;
    if (covered[x]) continue;
    gens.push_back(x);
    const auto span = closure(g, gens);
    covered = to_mask(g.order(), span);
    covered_count = span.size();
  }
  return gens;
}

bool lex_less(const SubgroupRecord& a, const SubgroupRecord& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

}  // namespace

std::vector<std::size_t> closure(const PermGroup& g, std::span<const std::size_t> seed) {
  std::vector<bool> mask(g.order(), false);
  std::vector<std::size_t> found{0};
  mask[0] = true;
  std::vector<std::size_t> gens;
  for (auto s : seed) {
    if (s != 0) gens.push_back(s);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (auto s : gens) {
      const std::size_t y = g.mul(found[k], s);
      if (!mask[y]) {
        mask[y] = true;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

SubgroupRecord SubgroupRecord::generated_by(GroupPtr parent, std::span<const std::size_t> seed) {
  for (auto s : seed) {
    if (s >= parent->order()) throw DomainError("element index outside the parent group");
  }
  auto impl = std::make_shared<Impl>();
  impl->elements = closure(*parent, seed);
  impl->mask = to_mask(parent->order(), impl->elements);
  if (impl->elements.size() == parent->order()) {
    for (auto s : parent->generator_indices()) {
      if (s != 0) impl->generators.push_back(s);
    }
  } else {
    impl->generators = greedy_generators(*parent, impl->elements);
  }
  bool normal = true;
  for (auto x : parent->generator_indices()) {
    for (auto h : impl->generators) {
      if (!impl->mask[parent->mul(parent->mul(parent->inv(x), h), x)]) {
        normal = false;
        break;
      }
    }
    if (!normal) break;
  }
  impl->is_normal = normal;
  impl->parent = std::move(parent);
  return SubgroupRecord(std::move(impl));
}

SubgroupRecord SubgroupRecord::whole(GroupPtr parent) {
  const auto& gens = parent->generator_indices();
  std::vector<std::size_t> seed(gens.begin(), gens.end());
  return generated_by(std::move(parent), seed);
}

SubgroupRecord SubgroupRecord::trivial(GroupPtr parent) {
  return generated_by(std::move(parent), {});
}

bool SubgroupRecord::is_subgroup_of(const SubgroupRecord& other) const {
  if (impl_->parent != other.impl_->parent) return false;
  return std::all_of(impl_->elements.begin(), impl_->elements.end(),
                     [&](std::size_t x) { return other.contains(x); });
}

const GroupPtr& SubgroupRecord::group() const {
  std::call_once(impl_->group_once, [this] {
    if (is_whole()) {
      impl_->group = impl_->parent;
      return;
    }
    std::vector<Perm> gens;
    for (auto s : impl_->generators) gens.push_back(impl_->parent->elements()[s]);
    impl_->group = PermGroup::create(std::move(gens), impl_->parent->degree(),
                                     impl_->parent->config(),
                                     "subgroup of order " + std::to_string(order()));
  });
  return impl_->group;
}

void SubgroupRecord::ensure_fusion() const {
  std::call_once(impl_->fusion_once, [this] {
    const auto& local = *group();
    const auto& parent = *impl_->parent;
    impl_->local_to_parent.resize(local.order());
    for (std::size_t i = 0; i < local.order(); ++i) {
      impl_->local_to_parent[i] = *parent.index_of(local.elements()[i]);
    }
    for (const auto& cls : local.classes()) {
      impl_->fusion.push_back(parent.class_of(impl_->local_to_parent[cls.rep_index]));
    }
  });
}

const std::vector<std::size_t>& SubgroupRecord::fusion() const {
  ensure_fusion();
  return impl_->fusion;
}

std::size_t SubgroupRecord::to_parent(std::size_t local_element) const {
  ensure_fusion();
  return impl_->local_to_parent[local_element];
}

bool SubgroupRecord::is_maximal() const {
  std::call_once(impl_->maximal_once, [this] {
    if (is_whole()) {
      impl_->maximal = false;
      return;
    }
    const auto& g = *impl_->parent;
    std::vector<std::size_t> gens = impl_->generators;
    gens.push_back(0);
    bool maximal = true;
    for (std::size_t x = 0; x < g.order() && maximal; ++x) {
      if (contains(x)) continue;
      gens.back() = x;
      maximal = closure(g, gens).size() == g.order();
    }
    impl_->maximal = maximal;
  });
  return impl_->maximal;
}

SubgroupRecord generated_subgroup(const GroupPtr& g, std::span<const Perm> seed) {
  std::vector<std::size_t> indices;
  for (const auto& p : seed) {
    auto idx = g->index_of(p);
    if (!idx) throw DomainError("element " + p.to_cycles() + " is not in the group");
    indices.push_back(*idx);
  }
  return SubgroupRecord::generated_by(g, indices);
}

SubgroupRecord normal_closure(const GroupPtr& g, std::span<const std::size_t> seed) {
  std::vector<std::size_t> gens(seed.begin(), seed.end());
  auto elements = closure(*g, gens);
  auto mask = to_mask(g->order(), elements);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto x : elements) {
      for (auto c : g->generator_indices()) {
        const std::size_t y = g->mul(g->mul(g->inv(c), x), c);
        if (!mask[y]) {
          gens.push_back(y);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
    if (changed) {
      elements = closure(*g, gens);
      mask = to_mask(g->order(), elements);
    }
  }
  return SubgroupRecord::generated_by(g, gens);
}

SubgroupRecord join(const SubgroupRecord& a, const SubgroupRecord& b) {
  if (a.parent() != b.parent()) throw DomainError("join: subgroups of different groups");
  std::vector<std::size_t> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return SubgroupRecord::generated_by(a.parent(), gens);
}

std::vector<std::vector<bool>> conjugate_masks(const SubgroupRecord& h) {
  const auto& g = *h.parent();
  std::unordered_set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<bool> mask(g.order(), false);
    const std::size_t xi = g.inv(x);
    for (auto e : h.elements()) mask[g.mul(g.mul(xi, e), x)] = true;
    if (seen.insert(mask).second) out.push_back(std::move(mask));
  }
  return out;
}

DerivedSeries derived_series(const GroupPtr& g) {
  DerivedSeries out;
  SubgroupRecord current = SubgroupRecord::whole(g);
  out.series.push_back(current);
  for (;;) {
    const auto& gens = current.generators();
    std::vector<std::size_t> seed;
    for (auto a : gens) {
      for (auto b : gens) {
        seed.push_back(g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
      }
    }
    // normal closure of the commutators inside `current`
    auto elements = closure(*g, seed);
    auto mask = to_mask(g->order(), elements);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto x : elements) {
        for (auto c : gens) {
          const std::size_t y = g->mul(g->mul(g->inv(c), x), c);
          if (!mask[y]) {
            seed.push_back(y);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
      if (changed) {
        elements = closure(*g, seed);
        mask = to_mask(g->order(), elements);
      }
    }
    if (elements.size() == current.order()) break;
    current = SubgroupRecord::generated_by(g, elements);
    out.series.push_back(current);
  }
  out.metabelian = out.series.back().order() == 1 && out.series.size() <= 3;
  out.abelianization_index = g->order() / out.derived_subgroup().order();
  return out;
}

std::vector<SubgroupRecord> subgroups_up_to_conjugacy(const GroupPtr& g) {
  if (g->order() > g->config().subgroup_cap) {
    throw CapExceeded("group order " + std::to_string(g->order()) +
                      " exceeds the subgroup-enumeration cap " +
                      std::to_string(g->config().subgroup_cap));
  }
  std::unordered_set<std::vector<bool>> seen;
  std::vector<SubgroupRecord> reps;

  auto add = [&](const SubgroupRecord& h) {
    if (seen.contains(h.mask())) return;
    auto masks = conjugate_masks(h);
    // least conjugate by sorted element list
    const std::vector<bool>* best = &masks.front();
    auto elements_of = [](const std::vector<bool>& m) {
      std::vector<std::size_t> e;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i]) e.push_back(i);
      }
      return e;
    };
    auto best_elements = elements_of(*best);
    for (const auto& m : masks) {
      auto e = elements_of(m);
      if (e < best_elements) {
        best_elements = std::move(e);
        best = &m;
      }
    }
    for (auto& m : masks) seen.insert(m);
    reps.push_back(SubgroupRecord::generated_by(g, best_elements));
  };

  for (const auto& cls : g->classes()) {
    const std::size_t rep[] = {cls.rep_index};
    add(SubgroupRecord::generated_by(g, rep));
  }
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const SubgroupRecord h = reps[k];
    std::vector<std::size_t> gens = h.generators();
    gens.push_back(0);
    std::vector<bool> tried(g->order(), false);
    for (std::size_t x = 0; x < g->order(); ++x) {
      if (h.contains(x) || tried[x]) continue;
      gens.back() = x;
      auto joined = SubgroupRecord::generated_by(g, gens);
      // every element of the join that is outside h gives the same join
      // only when it lies in h*x; mark the coset h*x as tried
      for (auto e : h.elements()) tried[g->mul(e, x)] = true;
      add(joined);
    }
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  return reps;
}

std::vector<SubgroupRecord> normal_subgroups(const GroupPtr& g) {
  std::unordered_set<std::vector<bool>> seen;
  std::vector<SubgroupRecord> found;
  auto add = [&](SubgroupRecord n) {
    if (seen.insert(n.mask()).second) found.push_back(std::move(n));
  };
  add(SubgroupRecord::trivial(g));
  for (const auto& cls : g->classes()) {
    const std::size_t rep[] = {cls.rep_index};
    add(normal_closure(g, rep));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) add(join(found[i], found[j]));
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

std::vector<SubgroupRecord> overgroups_of_normal(const SubgroupRecord& n) {
  if (!n.is_normal()) throw DomainError("overgroups_of_normal: subgroup is not normal");
  const auto& g = n.parent();
  std::vector<std::size_t> coset_reps;
  std::vector<bool> covered(g->order(), false);
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (covered[x]) continue;
    coset_reps.push_back(x);
    for (auto e : n.elements()) covered[g->mul(e, x)] = true;
  }

  std::unordered_set<std::vector<bool>> seen{n.mask()};
  std::vector<SubgroupRecord> found{n};
  for (std::size_t k = 0; k < found.size(); ++k) {
    const SubgroupRecord h = found[k];
    std::vector<std::size_t> gens = h.generators();
    gens.push_back(0);
    for (auto x : coset_reps) {
      if (h.contains(x)) continue;
      gens.back() = x;
      auto j = SubgroupRecord::generated_by(g, gens);
      if (seen.insert(j.mask()).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

std::vector<std::size_t> class_fusion(const GroupPtr& g, const SubgroupRecord& h) {
  if (h.parent() != g) {
    for (const auto& x : h.group()->elements()) {
      if (!g->index_of(x)) throw DomainError("class_fusion: H is not a subgroup of G");
    }
    std::vector<std::size_t> out;
    for (const auto& cls : h.group()->classes()) {
      out.push_back(g->class_of(*g->index_of(cls.representative)));
    }
    return out;
  }
  return h.fusion();
}

}  // namespace charkit
