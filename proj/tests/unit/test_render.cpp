#include <doctest.h>

#include <algorithm>

#include "charkit/catalog.hpp"
#include "charkit/render.hpp"

using namespace charkit;
using nlohmann::json;

namespace {

Cyclotomic from_json(const json& j) {
  const long e = j["conductor"];
  Cyclotomic out;
  for (const auto& term : j["terms"]) {
    Rational q(term["num"].get<long>(), term["den"].get<long>());
    out += Cyclotomic::root_of_unity(e, term["exp"].get<long>()) * q;
  }
  return out;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("cyclotomic JSON") {
    auto j = to_json(Cyclotomic::root_of_unity(3, 1));
    CHECK(j["conductor"] == 3);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0] == json{{"exp", 1}, {"num", 1}, {"den", 1}});
    auto half = to_json(Cyclotomic(Rational(-1, 2)));
    CHECK(half["terms"][0]["num"] == -1);
    CHECK(half["terms"][0]["den"] == 2);
    CHECK(to_json(Cyclotomic(0))["terms"].empty());
  }

  TEST_CASE("table JSON schema") {
    auto t = character_table(parse_group("name:S3"));
    auto j = to_json(t);
    CHECK(j["group"] == "name:S3");
    CHECK(j["order"] == 6);
    CHECK(j["exponent"] == 6);
    REQUIRE(j["classes"].size() == 3);
    for (const auto& c : j["classes"]) {
      CHECK(c.contains("rep"));
      CHECK(c.contains("size"));
      CHECK(c.contains("elementOrder"));
    }
    std::vector<int> degrees;
    for (const auto& r : j["irreducibles"]) {
      degrees.push_back(r["degree"]);
      CHECK(r["values"].size() == 3);
    }
    CHECK(degrees == std::vector<int>{1, 1, 2});
  }

  TEST_CASE("text and JSON agree") {
    for (const char* spec : {"name:Q8", "name:F21", "name:SL23"}) {
      auto t = character_table(parse_group(spec));
      auto text = render_text(t);
      auto j = to_json(t);
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t c = 0; c < t[i].size(); ++c) {
          CHECK(from_json(j["irreducibles"][i]["values"][c]) == t[i][c]);
          CHECK(text.find(t[i][c].to_string()) != std::string::npos);
        }
      }
    }
  }

  TEST_CASE("report JSON schema") {
    GroupAnalysis ctx(parse_group("name:S4"));
    auto report = classify_group(ctx);
    auto j = to_json(report, ctx);
    CHECK(j["group"] == "name:S4");
    CHECK(j["derivedIndex"] == 2);
    CHECK(j["counts"] == json{{"pri", 2}, {"qua", 2}, {"fullV", 4}});
    REQUIRE(j["rows"].size() == 5);
    for (const auto& r : j["rows"]) {
      for (const char* key : {"degree", "primitive", "quasiPrimitive", "fullVanishingOff",
                              "monomialWitness"}) {
        CHECK(r.contains(key));
      }
      CHECK(r["monomialWitness"]["subgroupOrder"].get<int>() * r["degree"].get<int>() == 24);
    }
    auto text = render_text(report, ctx);
    CHECK(text.find("pri=2 qua=2 fullV=4") != std::string::npos);
  }

  TEST_CASE("check results") {
    CheckResult r{"CHAIN", "name:S3", CheckStatus::kSkipped, "why", json::object()};
    auto j = to_json(r);
    CHECK(j["status"] == "skipped");
    CHECK(j["reason"] == "why");
    auto lines = render_json_lines({r, r});
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
    auto text = render_text(std::vector<CheckResult>{r});
    CHECK(text.find("0 passed, 0 failed, 1 skipped") != std::string::npos);
  }
}
