#include <doctest.h>

#include <algorithm>
#include <vector>

#include "charkit/catalog.hpp"
#include "charkit/errors.hpp"
#include "charkit/subgroup.hpp"

using namespace charkit;

namespace {

std::vector<std::size_t> orders(const std::vector<SubgroupRecord>& subs) {
  std::vector<std::size_t> out;
  for (const auto& h : subs) out.push_back(h.order());
  return out;
}

std::vector<std::size_t> series_orders(const DerivedSeries& d) { return orders(d.series); }

// Brute-force census oracle: every subgroup is generated by at most two
// elements in these small groups, so close all pairs and count conjugacy
// classes.
std::size_t brute_force_class_count(const GroupPtr& g) {
  std::vector<std::vector<bool>> seen;
  std::size_t classes = 0;
  for (std::size_t a = 0; a < g->order(); ++a) {
    for (std::size_t b = a; b < g->order(); ++b) {
      const std::size_t seed[] = {a, b};
      auto h = SubgroupRecord::generated_by(g, seed);
      if (std::find(seen.begin(), seen.end(), h.mask()) != seen.end()) continue;
      ++classes;
      for (auto& m : conjugate_masks(h)) seen.push_back(m);
    }
  }
  return classes;
}

}  // namespace

TEST_SUITE("subgroup") {
  TEST_CASE("derived series") {
    auto c6 = derived_series(parse_group("name:C6"));
    CHECK(series_orders(c6) == std::vector<std::size_t>{6, 1});
    CHECK(c6.metabelian);
    CHECK(c6.abelianization_index == 6);

    auto s3 = derived_series(parse_group("name:S3"));
    CHECK(series_orders(s3) == std::vector<std::size_t>{6, 3, 1});
    CHECK(s3.metabelian);
    CHECK(s3.abelianization_index == 2);

    auto s4 = derived_series(parse_group("name:S4"));
    CHECK(series_orders(s4) == std::vector<std::size_t>{24, 12, 4, 1});
    CHECK_FALSE(s4.metabelian);
    CHECK(s4.abelianization_index == 2);

    auto a5 = derived_series(parse_group("name:A5"));
    CHECK(series_orders(a5) == std::vector<std::size_t>{60});
    CHECK(a5.abelianization_index == 1);
    CHECK(a5.derived_subgroup().is_whole());

    CHECK(derived_series(parse_group("name:SL23")).abelianization_index == 3);
    CHECK(derived_series(parse_group("name:ES27")).abelianization_index == 9);
  }

  TEST_CASE("generated subgroups") {
    auto s4 = parse_group("name:S4");
    std::vector<Perm> v4 = {Perm::parse_cycles("(1 2)(3 4)", 4), Perm::parse_cycles("(1 3)(2 4)", 4)};
    auto h = generated_subgroup(s4, v4);
    CHECK(h.order() == 4);
    CHECK(h.is_normal());
    CHECK(generated_subgroup(s4, {}).order() == 1);
    std::vector<Perm> transpositions;
    for (int a = 1; a <= 4; ++a) {
      for (int b = a + 1; b <= 4; ++b) {
        transpositions.push_back(
            Perm::parse_cycles("(" + std::to_string(a) + " " + std::to_string(b) + ")", 4));
      }
    }
    CHECK(generated_subgroup(s4, transpositions).is_whole());
    std::vector<Perm> outside = {Perm::parse_cycles("(1 5)", 5)};
    CHECK_THROWS_AS(generated_subgroup(s4, outside), DomainError);
  }

  TEST_CASE("census up to conjugacy") {
    CHECK(orders(subgroups_up_to_conjugacy(parse_group("name:S3"))) ==
          std::vector<std::size_t>{1, 2, 3, 6});
    CHECK(subgroups_up_to_conjugacy(parse_group("name:C5")).size() == 2);
    CHECK(subgroups_up_to_conjugacy(parse_group("name:C7")).size() == 2);
    auto q8 = subgroups_up_to_conjugacy(parse_group("name:Q8"));
    CHECK(orders(q8) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
    for (const auto& h : q8) CHECK(h.is_normal());
    CHECK(subgroups_up_to_conjugacy(parse_group("name:S4")).size() == 11);
    CHECK(subgroups_up_to_conjugacy(parse_group("name:A4")).size() == 5);
    CHECK(subgroups_up_to_conjugacy(parse_group("name:SL23")).size() == 7);
    CHECK(subgroups_up_to_conjugacy(parse_group("name:A5")).size() == 9);
    CHECK(subgroups_up_to_conjugacy(parse_group("name:S5")).size() == 19);
  }

  TEST_CASE("census agrees with brute force") {
    for (const char* spec : {"name:S3", "name:D4", "name:Q8", "name:A4", "name:D6",
                             "name:C2xC4", "name:F21", "name:F20", "name:S4", "name:SL23"}) {
      CAPTURE(spec);
      auto g = parse_group(spec);
      CHECK(subgroups_up_to_conjugacy(g).size() == brute_force_class_count(g));
    }
  }

  TEST_CASE("census representatives are canonical") {
    auto g = parse_group("name:S4");
    for (const auto& h : subgroups_up_to_conjugacy(g)) {
      for (const auto& m : conjugate_masks(h)) {
        std::vector<std::size_t> elems;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i]) elems.push_back(i);
        }
        CHECK(h.elements() <= elems);
      }
    }
  }

  TEST_CASE("subgroup cap") {
    Config cfg;
    cfg.subgroup_cap = 10;
    auto g = parse_group("name:S4", cfg);
    CHECK_THROWS_AS(subgroups_up_to_conjugacy(g), CapExceeded);
    CHECK(normal_subgroups(g).size() == 4);
  }

  TEST_CASE("normal subgroups and overgroups") {
    CHECK(orders(normal_subgroups(parse_group("name:S4"))) ==
          std::vector<std::size_t>{1, 4, 12, 24});
    CHECK(normal_subgroups(parse_group("name:A5")).size() == 2);
    CHECK(normal_subgroups(parse_group("name:Q8")).size() == 6);
    CHECK(normal_subgroups(parse_group("name:C6")).size() == 4);

    auto s4 = parse_group("name:S4");
    CHECK(orders(overgroups_of_normal(derived_series(s4).derived_subgroup())) ==
          std::vector<std::size_t>{12, 24});
    auto q8 = parse_group("name:Q8");
    CHECK(orders(overgroups_of_normal(derived_series(q8).derived_subgroup())) ==
          std::vector<std::size_t>{2, 4, 4, 4, 8});
    auto c2c4 = parse_group("name:C2xC4");
    CHECK(overgroups_of_normal(SubgroupRecord::trivial(c2c4)).size() == 8);
  }

  TEST_CASE("maximal subgroups") {
    auto s4 = subgroups_up_to_conjugacy(parse_group("name:S4"));
    std::vector<std::size_t> maximal;
    for (const auto& h : s4) {
      if (h.is_maximal()) maximal.push_back(h.order());
    }
    CHECK(maximal == std::vector<std::size_t>{6, 8, 12});
    auto sl23 = subgroups_up_to_conjugacy(parse_group("name:SL23"));
    maximal.clear();
    for (const auto& h : sl23) {
      if (h.is_maximal()) maximal.push_back(h.order());
    }
    CHECK(maximal == std::vector<std::size_t>{6, 8});
  }

  TEST_CASE("class fusion") {
    auto s4 = parse_group("name:S4");
    auto a4 = derived_series(s4).derived_subgroup();
    const auto& fusion = a4.fusion();
    CHECK(fusion.size() == 4);
    std::vector<std::size_t> sorted = fusion;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    CHECK(sorted.size() == 3);
    CHECK(class_fusion(s4, a4) == fusion);

    auto whole = SubgroupRecord::whole(s4);
    for (std::size_t i = 0; i < s4->classes().size(); ++i) CHECK(whole.fusion()[i] == i);
    CHECK(SubgroupRecord::trivial(s4).fusion() == std::vector<std::size_t>{0});
  }

  TEST_CASE("joins and closures") {
    auto g = parse_group("name:S4");
    auto a4 = derived_series(g).derived_subgroup();
    const std::size_t t = *g->index_of(Perm::parse_cycles("(1 2)", 4));
    const std::size_t seed[] = {t};
    auto c2 = SubgroupRecord::generated_by(g, seed);
    CHECK(join(a4, c2).is_whole());
    CHECK(normal_closure(g, seed).is_whole());
    CHECK(c2.is_subgroup_of(join(a4, c2)));
    CHECK(conjugate_masks(c2).size() == 6);
    CHECK(conjugate_masks(a4).size() == 1);
  }
}
