#include <doctest.h>

#include <tuple>

#include "charkit/catalog.hpp"
#include "charkit/classify.hpp"
#include "charkit/errors.hpp"

using namespace charkit;

namespace {

std::tuple<std::size_t, std::size_t, std::size_t> counts(const ClassificationReport& r) {
  return {r.primitive_count, r.quasi_primitive_count, r.full_vanishing_off_count};
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("report counts") {
    auto q8 = classify_group(parse_group("name:Q8"));
    CHECK(counts(q8) == std::make_tuple(4u, 4u, 4u));
    CHECK(q8.derived_index == 4);
    auto s4 = classify_group(parse_group("name:S4"));
    CHECK(counts(s4) == std::make_tuple(2u, 2u, 4u));
    CHECK(s4.derived_index == 2);
    auto a4 = classify_group(parse_group("name:A4"));
    CHECK(counts(a4) == std::make_tuple(3u, 3u, 3u));
    auto sl23 = classify_group(parse_group("name:SL23"));
    CHECK(sl23.primitive_count == 6);
    CHECK(sl23.primitive_count % sl23.derived_index == 0);
    auto c6 = classify_group(parse_group("name:C6"));
    CHECK(counts(c6) == std::make_tuple(6u, 6u, 6u));
  }

  TEST_CASE("S4 rows") {
    GroupAnalysis ctx(parse_group("name:S4"));
    auto report = classify_group(ctx);
    const auto& t = ctx.table();
    for (std::size_t i = 0; i < t.size(); ++i) {
      CAPTURE(i);
      const auto& row = report.rows[i];
      CHECK(row.monomial.has_value());
      if (t.degree(i) == 1) {
        CHECK(row.primitive);
        CHECK(row.quasi_primitive);
        CHECK(row.full_vanishing_off);
      } else if (t.degree(i) == 2) {
        CHECK_FALSE(row.primitive);
        CHECK_FALSE(row.quasi_primitive);
        CHECK_FALSE(row.full_vanishing_off);
      } else {
        CHECK_FALSE(row.primitive);
        CHECK_FALSE(row.quasi_primitive);
        CHECK(row.full_vanishing_off);
        const auto& h = ctx.subgroup_classes()[row.monomial->subgroup];
        CHECK(h.order() == 8);
      }
    }
  }

  TEST_CASE("single-character predicates") {
    GroupAnalysis q8(parse_group("name:Q8"));
    const auto& chi2 = q8.table()[4];
    CHECK_FALSE(is_primitive(chi2, q8));
    CHECK_FALSE(is_quasi_primitive(chi2, q8));
    CHECK_FALSE(has_full_vanishing_off(chi2, q8));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(is_primitive(q8.table()[i], q8));
      CHECK(is_quasi_primitive(q8.table()[i], q8));
      CHECK(has_full_vanishing_off(q8.table()[i], q8));
    }

    GroupAnalysis sl23(parse_group("name:SL23"));
    for (std::size_t i = 0; i < sl23.table().size(); ++i) {
      if (sl23.table().degree(i) == 2) CHECK(is_primitive(sl23.table()[i], sl23));
      if (sl23.table().degree(i) == 3) CHECK_FALSE(is_primitive(sl23.table()[i], sl23));
    }

    GroupAnalysis s3(parse_group("name:S3"));
    auto w = monomial_witness(s3.table()[2], s3);
    REQUIRE(w);
    const auto& h = s3.subgroup_classes()[w->subgroup];
    CHECK(h.order() == 3);
    CHECK(h.is_normal());
    CHECK(induce(s3.table_of(h)[w->character], h) == s3.table()[2]);
    auto lin = monomial_witness(s3.table()[1], s3);
    REQUIRE(lin);
    CHECK(s3.subgroup_classes()[lin->subgroup].is_whole());
  }

  TEST_CASE("maximal-subgroup search matches the exhaustive search") {
    for (const auto& spec : default_catalog()) {
      GroupAnalysis ctx(parse_group(spec));
      if (ctx.group()->order() > 24) continue;
      CAPTURE(spec);
      for (const auto& chi : ctx.table().rows()) {
        CHECK(is_primitive(chi, ctx, PrimitivitySearch::kMaximalSubgroups) ==
              is_primitive(chi, ctx, PrimitivitySearch::kAllSubgroups));
      }
    }
  }

  TEST_CASE("non-solvable groups") {
    auto a5 = classify_group(parse_group("name:A5"));
    CHECK(counts(a5) == std::make_tuple(4u, 5u, 5u));
    // Degree 5 is induced from a linear character of A4; degrees 3 and 4
    // have no subgroup of matching index.
    CHECK_FALSE(a5.rows[4].primitive);
    CHECK(a5.rows[4].monomial.has_value());
    for (std::size_t i = 1; i < 4; ++i) CHECK_FALSE(a5.rows[i].monomial.has_value());
    auto s5 = classify_group(parse_group("name:S5"));
    CHECK(counts(s5) == std::make_tuple(6u, 6u, 6u));
  }

  TEST_CASE("report invariants hold across the catalog") {
    for (const auto& spec : default_catalog()) {
      CAPTURE(spec);
      auto report = classify_group(parse_group(spec));
      CHECK(report.invariant_violations().empty());
      CHECK(report.rows.size() == parse_group(spec)->classes().size());
    }
  }

  TEST_CASE("violations are detected") {
    ClassificationReport r;
    r.derived_index = 2;
    r.rows.push_back({1, true, false, true, std::nullopt});
    r.primitive_count = 1;
    r.quasi_primitive_count = 0;
    CHECK(r.invariant_violations().size() >= 3);
  }

  TEST_CASE("census cap propagates") {
    Config cfg;
    cfg.subgroup_cap = 20;
    CHECK_THROWS_AS(classify_group(parse_group("name:S4", cfg)), CapExceeded);
  }

  TEST_CASE("subgroup tables are cached") {
    GroupAnalysis ctx(parse_group("name:S4"));
    const auto& h = ctx.subgroup_classes()[3];
    CHECK(&ctx.table_of(h) == &ctx.table_of(h));
    CHECK(&ctx.table() == &ctx.table_of(SubgroupRecord::whole(ctx.group())));
    GroupAnalysis other(parse_group("name:S4"));
    CHECK_THROWS_AS(ctx.table_of(other.subgroup_classes()[3]), DomainError);
  }
}
