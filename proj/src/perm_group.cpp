#include "charkit/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "charkit/errors.hpp"

namespace charkit {

namespace {

constexpr std::size_t kProductTableLimit = 1024;

std::optional<Point> first_moved_point(const Perm& g) {
  for (Point x = 0; x < g.degree(); ++x) {
    if (g[x] != x) return x;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(const std::vector<Perm>& generators, std::size_t degree)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (!g.is_identity()) strong_generators_.push_back(g.extended(degree));
  }
  if (strong_generators_.empty()) return;

  for (const auto& g : strong_generators_) {
    const bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                        [&](const Level& l) { return g[l.base_point] == l.base_point; });
    if (fixes_base) {
      Level level;
      level.base_point = *first_moved_point(g);
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const Level& level = levels_[static_cast<std::size_t>(i)];
    const std::vector<Point> orbit = level.orbit;
    const std::vector<Perm> gens = level.generators;
    for (Point beta : orbit) {
      for (const auto& x : gens) {
        const Level& cur = levels_[static_cast<std::size_t>(i)];
        const Perm h = cur.transversal.at(beta) * x * cur.transversal.at(x[beta]).inverse();
        auto [residue, failed_at] = strip(h);
        if (failed_at == levels_.size() && residue.is_identity()) continue;
        if (failed_at == levels_.size()) {
          Level fresh;
          fresh.base_point = *first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        strong_generators_.push_back(residue);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= failed_at; ++l) rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(failed_at);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);
}

void StabilizerChain::rebuild_level(std::size_t i) {
  Level& level = levels_[i];
  level.generators.clear();
  for (const auto& g : strong_generators_) {
    bool fixes = true;
    for (std::size_t l = 0; l < i; ++l) {
      if (g[levels_[l].base_point] != levels_[l].base_point) {
        fixes = false;
        break;
      }
    }
    if (fixes) level.generators.push_back(g);
  }
  level.transversal.clear();
  level.orbit.clear();
  level.transversal.emplace(level.base_point, Perm::identity(degree_));
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point x = level.orbit[k];
    for (const auto& s : level.generators) {
      const Point y = s[x];
      if (level.transversal.contains(y)) continue;
      level.transversal.emplace(y, level.transversal.at(x) * s);
      level.orbit.push_back(y);
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(const Perm& g) const {
  Perm h = g.extended(degree_);
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Point beta = h[levels_[l].base_point];
    auto it = levels_[l].transversal.find(beta);
    if (it == levels_[l].transversal.end()) return {h, l};
    h = h * it->second.inverse();
  }
  return {h, levels_.size()};
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    if (__builtin_mul_overflow(result, level.orbit.size(), &result)) {
      throw CapExceeded("group order does not fit in 64 bits");
    }
  }
  return result;
}

bool StabilizerChain::contains(const Perm& g) const {
  auto [residue, level] = strip(g);
  return level == levels_.size() && residue.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::vector<Perm> generators, std::size_t degree, Config config,
                     std::string name)
    : name_(std::move(name)),
      degree_(degree),
      generators_(std::move(generators)),
      config_(config),
      chain_(generators_, degree_),
      order_(chain_.order()) {}

GroupPtr PermGroup::create(std::vector<Perm> generators, std::size_t degree, Config config,
                           std::string name) {
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  degree = std::max<std::size_t>(degree, 1);
  for (auto& g : generators) g = g.extended(degree);
  if (config.element_cap == 0 || config.subgroup_cap == 0) {
    throw DomainError("caps must be positive");
  }
  return GroupPtr(new PermGroup(std::move(generators), degree, config, std::move(name)));
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() > degree_) {
    bool moves_outside = false;
    for (Point x = static_cast<Point>(degree_); x < g.degree(); ++x) moves_outside |= g[x] != x;
    if (moves_outside) throw DomainError("permutation acts on more points than the group");
  }
  if (g.degree() != degree_ && g.degree() > degree_) {
    std::vector<Point> images(g.images().begin(), g.images().begin() + degree_);
    return chain_.contains(Perm(std::move(images)));
  }
  return chain_.contains(g.extended(degree_));
}

const PermGroup::Enumeration& PermGroup::enumeration() const {
  std::call_once(enum_once_, [this] {
    if (order_ > config_.element_cap) {
      throw CapExceeded("group order " + std::to_string(order_) +
                        " exceeds the element-enumeration cap " +
                        std::to_string(config_.element_cap));
    }
    auto data = std::make_unique<Enumeration>();
    std::unordered_map<Perm, std::size_t, PermHash> seen;
    std::vector<Perm> found{Perm::identity(degree_)};
    seen.emplace(found.front(), 0);
    for (std::size_t k = 0; k < found.size(); ++k) {
      for (const auto& s : generators_) {
        Perm next = found[k] * s;
        if (seen.contains(next)) continue;
        seen.emplace(next, found.size());
        found.push_back(std::move(next));
      }
    }
    std::sort(found.begin(), found.end());
    data->index.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) data->index.emplace(found[i], i);
    data->inverse.resize(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
      data->inverse[i] = data->index.at(found[i].inverse());
    }
    for (const auto& g : generators_) data->generator_indices.push_back(data->index.at(g));
    data->elements = std::move(found);
    const std::size_t n = data->elements.size();
    if (n <= kProductTableLimit) {
      data->table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          data->table[a * n + b] =
              static_cast<std::uint32_t>(data->index.at(data->elements[a] * data->elements[b]));
        }
      }
    }
    enum_ = std::move(data);
  });
  return *enum_;
}

const std::vector<Perm>& PermGroup::elements() const { return enumeration().elements; }

std::optional<std::size_t> PermGroup::index_of(const Perm& g) const {
  const auto& e = enumeration();
  auto it = e.index.find(g.degree() == degree_ ? g : g.extended(degree_));
  if (it == e.index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const {
  const auto& e = enumeration();
  if (!e.table.empty()) return e.table[a * e.elements.size() + b];
  return e.index.at(e.elements[a] * e.elements[b]);
}

std::size_t PermGroup::inv(std::size_t a) const { return enumeration().inverse[a]; }

const std::vector<std::size_t>& PermGroup::generator_indices() const {
  return enumeration().generator_indices;
}

const PermGroup::ClassData& PermGroup::class_data() const {
  std::call_once(class_once_, [this] {
    const auto& e = enumeration();
    const std::size_t n = e.elements.size();
    auto data = std::make_unique<ClassData>();
    constexpr auto kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> raw_class(n, kUnassigned);
    std::vector<ConjugacyClass> raw;
    for (std::size_t start = 0; start < n; ++start) {
      if (raw_class[start] != kUnassigned) continue;
      const std::size_t id = raw.size();
      std::vector<std::size_t> orbit{start};
      raw_class[start] = id;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (std::size_t g : e.generator_indices) {
          const std::size_t y = mul(mul(e.inverse[g], orbit[k]), g);
          if (raw_class[y] == kUnassigned) {
            raw_class[y] = id;
            orbit.push_back(y);
          }
        }
      }
      ConjugacyClass cls;
      cls.representative = e.elements[start];
      cls.rep_index = start;
      cls.size = orbit.size();
      cls.element_order = e.elements[start].order();
      cls.centralizer_order = n / orbit.size();
      raw.push_back(std::move(cls));
    }

    std::vector<std::size_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(raw[a].element_order, raw[a].size, raw[a].rep_index) <
             std::tie(raw[b].element_order, raw[b].size, raw[b].rep_index);
    });
    std::vector<std::size_t> new_id(raw.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      new_id[perm[i]] = i;
      data->classes.push_back(raw[perm[i]]);
    }
    data->class_of.resize(n);
    for (std::size_t x = 0; x < n; ++x) data->class_of[x] = new_id[raw_class[x]];

    for (const auto& cls : data->classes) {
      data->exponent = std::lcm(data->exponent, cls.element_order);
      std::vector<std::size_t> powers;
      std::size_t current = 0;  // identity
      for (std::uint64_t k = 0; k < cls.element_order; ++k) {
        powers.push_back(data->class_of[current]);
        current = mul(current, cls.rep_index);
      }
      data->powers.push_back(std::move(powers));
    }
    class_data_ = std::move(data);
  });
  return *class_data_;
}

const std::vector<ConjugacyClass>& PermGroup::classes() const { return class_data().classes; }

std::size_t PermGroup::class_of(std::size_t element) const {
  return class_data().class_of[element];
}

std::size_t PermGroup::power_class(std::size_t cls, std::int64_t k) const {
  const auto& powers = class_data().powers[cls];
  const auto ord = static_cast<std::int64_t>(powers.size());
  std::int64_t e = k % ord;
  if (e < 0) e += ord;
  return powers[static_cast<std::size_t>(e)];
}

std::uint64_t PermGroup::exponent() const { return class_data().exponent; }

}  // namespace charkit
