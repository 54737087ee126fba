#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "charkit/config.hpp"
#include "charkit/perm.hpp"

namespace charkit {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Handles groups far beyond the enumeration cap.
class StabilizerChain {
 public:
  StabilizerChain(const std::vector<Perm>& generators, std::size_t degree);

  /// Product of the basic orbit lengths. Throws CapExceeded on overflow.
  std::uint64_t order() const;
  /// Sifts g through the chain; true iff the residue is the identity.
  bool contains(const Perm& g) const;
  std::vector<Point> base() const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> generators;
    // transversal[x] maps base_point to x, for x in the basic orbit
    std::unordered_map<Point, Perm> transversal;
    std::vector<Point> orbit;
  };

  std::pair<Perm, std::size_t> strip(const Perm& g) const;
  void rebuild_level(std::size_t i);

  std::size_t degree_;
  std::vector<Perm> strong_generators_;
  std::vector<Level> levels_;
};

struct ConjugacyClass {
  Perm representative;
  std::size_t rep_index = 0;  // position in PermGroup::elements()
  std::size_t size = 0;
  std::uint64_t element_order = 1;
  std::size_t centralizer_order = 0;
};

/// A finite group given by permutation generators on `degree` points.
///
/// Immutable after construction; enumeration data (sorted element list,
/// conjugacy classes, power maps) is computed lazily and thread-safely.
/// Elements are numbered by their position in lexicographic order of image
/// lists, so the identity is element 0. Classes are ordered by
/// (element order, class size, minimal representative).
class PermGroup {
 public:
  /// Validates the generators and builds the stabilizer chain.
  static GroupPtr create(std::vector<Perm> generators, std::size_t degree,
                         Config config = {}, std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Config& config() const { return config_; }
  const StabilizerChain& chain() const { return chain_; }

  std::uint64_t order() const { return order_; }
  /// Membership by sifting; throws DomainError on a degree mismatch.
  bool contains(const Perm& g) const;

  /// Full element list; throws CapExceeded above config().element_cap.
  const std::vector<Perm>& elements() const;
  std::optional<std::size_t> index_of(const Perm& g) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  /// Element indices of the generators.
  const std::vector<std::size_t>& generator_indices() const;

  const std::vector<ConjugacyClass>& classes() const;
  std::size_t class_of(std::size_t element) const;
  /// Class containing rep(cls)^k.
  std::size_t power_class(std::size_t cls, std::int64_t k) const;
  std::uint64_t exponent() const;

 private:
  PermGroup(std::vector<Perm> generators, std::size_t degree, Config config,
            std::string name);

  struct Enumeration {
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::size_t, PermHash> index;
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> generator_indices;
    std::vector<std::uint32_t> table;  // row-major products when small
  };
  struct ClassData {
    std::vector<ConjugacyClass> classes;
    std::vector<std::size_t> class_of;
    std::vector<std::vector<std::size_t>> powers;  // powers[c][k], k < order
    std::uint64_t exponent = 1;
  };

  const Enumeration& enumeration() const;
  const ClassData& class_data() const;

  std::string name_;
  std::size_t degree_;
  std::vector<Perm> generators_;
  Config config_;
  StabilizerChain chain_;
  std::uint64_t order_;

  mutable std::once_flag enum_once_;
  mutable std::unique_ptr<Enumeration> enum_;
  mutable std::once_flag class_once_;
  mutable std::unique_ptr<ClassData> class_data_;
};

}  // namespace charkit
