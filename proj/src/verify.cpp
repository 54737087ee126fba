#include "charkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "charkit/catalog.hpp"
#include "charkit/errors.hpp"

namespace charkit {

using nlohmann::json;

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "fail";
}

namespace {

// Thrown inside a check to turn the current cell into a failure carrying a
// witness.
struct CheckFailure {
  std::string reason;
  json witness;
};

[[noreturn]] void fail(std::string reason, json witness) {
  throw CheckFailure{std::move(reason), std::move(witness)};
}

struct Skip {
  std::string reason;
};

json subgroup_json(const SubgroupRecord& h) {
  json gens = json::array();
  const auto& elements = h.parent()->elements();
  for (auto g : h.generators()) gens.push_back(elements[g].to_cycles());
  return {{"order", h.order()}, {"generators", gens}};
}

json values_json(const ClassFunction& chi) {
  json values = json::array();
  for (const auto& v : chi.values()) values.push_back(v.to_string());
  return values;
}

json character_json(const CharacterTable& table, std::size_t row) {
  return {{"row", row}, {"degree", table.degree(row)}, {"values", values_json(table[row])}};
}

bool irreducible_restriction(const ClassFunction& chi, const SubgroupRecord& h) {
  return norm(restrict(chi, h)) == 1;
}

json lemma_orbit(const GroupAnalysis& ctx) {
  const CharacterTable& table = ctx.table();
  const auto& classes = table.classes();
  const std::uint64_t order = ctx.group()->order();
  std::size_t pairs = 0;
  std::size_t constituents = 0;
  for (const auto& h : ctx.derived_overgroups()) {
    const CharacterTable& sub = ctx.table_of(h);
    const std::uint64_t index = order / h.order();
    for (std::size_t row = 0; row < table.size(); ++row) {
      const ClassFunction& chi = table[row];
      OrbitData orbit = orbit_and_stabilizer(chi, h, table);
      ClassFunction sum = orbit.orbit.front();
      for (std::size_t i = 1; i < orbit.orbit.size(); ++i) sum += orbit.orbit[i];
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (!h.contains(classes[c].rep_index) && !sum[c].is_zero()) {
          fail("orbit sum does not vanish off H",
               {{"H", subgroup_json(h)}, {"chi", character_json(table, row)}, {"class", c}});
        }
      }
      std::vector<std::size_t> orbit_rows = orbit.orbit_rows;
      std::sort(orbit_rows.begin(), orbit_rows.end());
      auto mult = decompose(restrict(chi, h), sub);
      for (std::size_t x = 0; x < sub.size(); ++x) {
        if (mult[x] == 0) continue;
        const std::size_t e = mult[x];
        json witness = {{"H", subgroup_json(h)},
                        {"chi", character_json(table, row)},
                        {"xi", character_json(sub, x)},
                        {"multiplicity", e}};
        ClassFunction induced = induce(sub[x], h);
        if (induced != sum * Rational(e)) fail("xi^G differs from e times the orbit sum", witness);
        if (index * sub.degree(x) != e * orbit.orbit.size() * table.degree(row)) {
          fail("degree identity |G:H| xi(1) = e k chi(1) fails", witness);
        }
        auto induced_mult = decompose(induced, table);
        std::vector<std::size_t> support;
        for (std::size_t r = 0; r < induced_mult.size(); ++r) {
          if (induced_mult[r] != 0) support.push_back(r);
        }
        if (support != orbit_rows) fail("constituents of xi^G differ from the orbit", witness);
        ++constituents;
      }
      ++pairs;
    }
  }
  return {{"subgroups", ctx.derived_overgroups().size()},
          {"pairs", pairs},
          {"constituents", constituents}};
}

json restriction_equiv(const GroupAnalysis& ctx) {
  const CharacterTable& table = ctx.table();
  std::vector<SubgroupRecord> vanishing;
  for (const auto& chi : table.rows()) vanishing.push_back(vanishing_off_subgroup(chi));
  std::size_t both_true = 0;
  std::size_t both_false = 0;
  for (const auto& h : ctx.derived_overgroups()) {
    for (std::size_t row = 0; row < table.size(); ++row) {
      const bool generates = join(h, vanishing[row]).is_whole();
      const bool irreducible = irreducible_restriction(table[row], h);
      json witness = {{"H", subgroup_json(h)},
                      {"chi", character_json(table, row)},
                      {"V", subgroup_json(vanishing[row])},
                      {"HV_is_G", generates},
                      {"restriction_irreducible", irreducible}};
      if (generates && !irreducible) fail("H V(chi) = G but chi_H is reducible", witness);
      if (!generates && irreducible) fail("chi_H is irreducible but H V(chi) != G", witness);
      if (!generates) {
        ++both_false;
        continue;
      }
      auto orbit = orbit_and_stabilizer(table[row], h, table);
      if (orbit.stabilizer.size() != 1) {
        witness["stabilizer"] = orbit.stabilizer;
        fail("stabilizer in Irr(G/H) is not trivial", witness);
      }
      ++both_true;
    }
  }
  return {{"subgroups", ctx.derived_overgroups().size()},
          {"characters", table.size()},
          {"holds", both_true},
          {"failsBothSides", both_false}};
}

bool cyclic_quotient(const SubgroupRecord& n, const GroupAnalysis& ctx) {
  // G/N is cyclic iff some gN generates it; conjugates of g give the same
  // coset image in an abelian quotient, so class representatives suffice.
  for (const auto& cls : ctx.group()->classes()) {
    const std::size_t seed[] = {cls.rep_index};
    if (join(n, SubgroupRecord::generated_by(ctx.group(), seed)).is_whole()) return true;
  }
  return false;
}

bool invariant_in_parent(const ClassFunction& phi, const SubgroupRecord& n) {
  const PermGroup& g = *n.parent();
  const PermGroup& local = *n.group();
  for (auto x : g.generator_indices()) {
    const std::size_t x_inv = g.inv(x);
    for (std::size_t d = 0; d < local.classes().size(); ++d) {
      const std::size_t p = n.to_parent(local.classes()[d].rep_index);
      const std::size_t y = g.mul(g.mul(x_inv, p), x);
      const auto image = local.index_of(g.elements()[y]);
      if (!image) throw Error("conjugate of a normal subgroup element left the subgroup");
      if (phi[local.class_of(*image)] != phi[d]) return false;
    }
  }
  return true;
}

json extend_cyclic(const GroupAnalysis& ctx) {
  const CharacterTable& table = ctx.table();
  std::size_t subgroups = 0;
  std::size_t invariant = 0;
  for (const auto& n : ctx.normal_subgroups()) {
    if (!cyclic_quotient(n, ctx)) continue;
    ++subgroups;
    const CharacterTable& sub = ctx.table_of(n);
    std::vector<ClassFunction> restrictions;
    for (const auto& chi : table.rows()) restrictions.push_back(restrict(chi, n));
    for (std::size_t x = 0; x < sub.size(); ++x) {
      if (!invariant_in_parent(sub[x], n)) continue;
      ++invariant;
      if (std::find(restrictions.begin(), restrictions.end(), sub[x]) == restrictions.end()) {
        fail("invariant character has no extension",
             {{"H", subgroup_json(n)}, {"phi", character_json(sub, x)}});
      }
    }
  }
  return {{"cyclicQuotients", subgroups}, {"invariantCharacters", invariant}};
}

json restricts_irreducibly(const GroupAnalysis& ctx, const std::vector<bool>& flags,
                           const char* what) {
  const CharacterTable& table = ctx.table();
  const SubgroupRecord& derived = ctx.derived_subgroup();
  std::size_t linear = 0;
  std::size_t nonlinear = 0;
  for (std::size_t row = 0; row < table.size(); ++row) {
    if (!flags[row]) continue;
    if (!irreducible_restriction(table[row], derived)) {
      fail(std::string(what) + " character restricts reducibly to G'",
           {{"chi", character_json(table, row)}, {"derived", subgroup_json(derived)}});
    }
    ++(table.degree(row) == 1 ? linear : nonlinear);
  }
  return {{"linear", linear}, {"nonlinear", nonlinear}};
}

json metabelian(const GroupAnalysis& ctx) {
  if (!ctx.derived().metabelian) throw Skip{"group is not metabelian"};
  const CharacterTable& table = ctx.table();
  const auto& census = ctx.subgroup_classes();
  json witnesses = json::array();
  for (std::size_t row = 0; row < table.size(); ++row) {
    auto w = monomial_witness(table[row], ctx);
    if (!w) fail("irreducible character without a monomial witness", {{"chi", character_json(table, row)}});
    const SubgroupRecord& h = census[w->subgroup];
    const CharacterTable& sub = ctx.table_of(h);
    json classes = json::array();
    for (const auto& cls : sub.classes()) classes.push_back(cls.representative.to_cycles());
    json entry = {{"row", row},
                  {"H", subgroup_json(h)},
                  {"classes", classes},
                  {"lambda", values_json(sub[w->character])}};
    if (sub.degree(w->character) != 1 ||
        ctx.group()->order() / h.order() != table.degree(row) ||
        induce(sub[w->character], h) != table[row]) {
      fail("re-inducing the monomial witness does not give chi", entry);
    }
    witnesses.push_back(std::move(entry));
  }
  return {{"witnesses", witnesses}};
}

json divisibility(const GroupAnalysis& ctx) {
  const CharacterTable& table = ctx.table();
  const std::size_t index = ctx.derived().abelianization_index;
  const SubgroupRecord& derived = ctx.derived_subgroup();
  json data = {{"index", index}};
  for (auto [name, flags] : {std::pair{"pri", &ctx.primitive_flags()},
                             std::pair{"qua", &ctx.quasi_primitive_flags()}}) {
    const std::size_t count = std::count(flags->begin(), flags->end(), true);
    data[name] = count;
    if (count % index != 0) fail(std::string("|G:G'| does not divide |Irr_") + name + "|", data);
    for (std::size_t row = 0; row < table.size(); ++row) {
      if (!(*flags)[row]) continue;
      auto orbit = orbit_and_stabilizer(table[row], derived, table);
      json witness = {{"set", name}, {"chi", character_json(table, row)}};
      if (orbit.stabilizer.size() != 1) fail("nontrivial stabilizer in Irr(G/G')", witness);
      if (orbit.orbit_rows.size() != index) fail("orbit size differs from |G:G'|", witness);
      for (auto r : orbit.orbit_rows) {
        if (!(*flags)[r]) fail("Irr(G/G') orbit leaves the set", witness);
      }
    }
  }
  return data;
}

json chain(const GroupAnalysis& ctx) {
  const auto& pri = ctx.primitive_flags();
  const auto& qua = ctx.quasi_primitive_flags();
  const auto& full = ctx.full_vanishing_off_flags();
  const CharacterTable& table = ctx.table();
  for (std::size_t row = 0; row < table.size(); ++row) {
    if (pri[row] && !qua[row]) fail("primitive but not quasi-primitive", character_json(table, row));
    if (qua[row] && !full[row]) fail("quasi-primitive but V(chi)G' != G", character_json(table, row));
  }
  const std::size_t p = std::count(pri.begin(), pri.end(), true);
  const std::size_t q = std::count(qua.begin(), qua.end(), true);
  const std::size_t f = std::count(full.begin(), full.end(), true);
  return {{"pri", p},
          {"qua", q},
          {"fullV", f},
          {"irr", table.size()},
          {"strict", {{"priQua", p < q}, {"quaFullV", q < f}, {"fullVIrr", f < table.size()}}}};
}

json s4_remark(const GroupAnalysis& ctx) {
  const auto& series = ctx.derived().series;
  std::vector<std::size_t> orders;
  for (const auto& s : series) orders.push_back(s.order());
  // The only group of order 24 whose derived subgroup has order 12 is S4.
  if (orders != std::vector<std::size_t>{24, 12, 4, 1}) throw Skip{"group is not S4"};
  const CharacterTable& table = ctx.table();
  const SubgroupRecord& a4 = series[1];
  const SubgroupRecord& v4 = series[2];
  const auto& qua = ctx.quasi_primitive_flags();
  std::size_t degree3 = 0;
  for (std::size_t row = 0; row < table.size(); ++row) {
    if (table.degree(row) != 3) continue;
    ++degree3;
    json witness = character_json(table, row);
    if (qua[row]) fail("degree-3 character is quasi-primitive", witness);
    if (constituent_count(restrict(table[row], v4), ctx.table_of(v4)) < 2) {
      fail("degree-3 character is homogeneous on V4", witness);
    }
    if (!irreducible_restriction(table[row], a4)) fail("restriction to A4 is reducible", witness);
  }
  if (degree3 != 2) fail("S4 should have exactly two degree-3 irreducibles", {{"degree3", degree3}});
  return {{"degree3", degree3}};
}

const std::map<std::string, std::function<json(const GroupAnalysis&)>, std::less<>>& registry() {
  static const std::map<std::string, std::function<json(const GroupAnalysis&)>, std::less<>> r = {
      {"LEMMA_ORBIT", lemma_orbit},
      {"THM_RESTRICTION_EQUIV", restriction_equiv},
      {"EXTEND_CYCLIC", extend_cyclic},
      {"THM_QUASI_RESTRICT",
       [](const GroupAnalysis& ctx) {
         return restricts_irreducibly(ctx, ctx.quasi_primitive_flags(), "quasi-primitive");
       }},
      {"COR_PRIM_RESTRICT",
       [](const GroupAnalysis& ctx) {
         return restricts_irreducibly(ctx, ctx.primitive_flags(), "primitive");
       }},
      {"COR_METABELIAN", metabelian},
      {"THM_DIVISIBILITY", divisibility},
      {"CHAIN", chain},
      {"S4_REMARK", s4_remark},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "LEMMA_ORBIT",       "THM_RESTRICTION_EQUIV", "EXTEND_CYCLIC",
      "THM_QUASI_RESTRICT", "COR_PRIM_RESTRICT",    "COR_METABELIAN",
      "THM_DIVISIBILITY",  "CHAIN",                 "S4_REMARK",
  };
  return ids;
}

CheckResult run_check(std::string_view id, const GroupAnalysis& ctx) {
  CheckResult result;
  result.check = std::string(id);
  result.group = ctx.group()->name();
  auto it = registry().find(id);
  if (it == registry().end()) {
    result.status = CheckStatus::kFail;
    result.reason = "unknown check id";
    return result;
  }
  try {
    result.data = it->second(ctx);
  } catch (const CheckFailure& f) {
    result.status = CheckStatus::kFail;
    result.reason = f.reason;
    result.data = f.witness;
  } catch (const Skip& s) {
    result.status = CheckStatus::kSkipped;
    result.reason = s.reason;
  } catch (const CapExceeded& e) {
    result.status = CheckStatus::kSkipped;
    result.reason = e.what();
  } catch (const std::exception& e) {
    result.status = CheckStatus::kFail;
    result.reason = std::string("error: ") + e.what();
  }
  return result;
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& catalog,
                                   const std::vector<std::string>& checks, const Config& config,
                                   std::optional<std::uint64_t> max_order) {
  std::vector<CheckResult> out;
  for (const auto& spec : catalog) {
    auto whole_row = [&](CheckStatus status, const std::string& reason) {
      for (const auto& id : checks) out.push_back({id, spec, status, reason, json::object()});
    };
    GroupPtr group;
    try {
      group = parse_group(spec, config);
    } catch (const CapExceeded& e) {
      whole_row(CheckStatus::kSkipped, e.what());
      continue;
    } catch (const std::exception& e) {
      whole_row(CheckStatus::kFail, std::string("error: ") + e.what());
      continue;
    }
    if (max_order && group->order() > *max_order) {
      whole_row(CheckStatus::kSkipped, "order " + std::to_string(group->order()) +
                                           " exceeds max order " + std::to_string(*max_order));
      continue;
    }
    GroupAnalysis ctx(group);
    for (const auto& id : checks) out.push_back(run_check(id, ctx));
  }
  return out;
}

bool any_failed(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == CheckStatus::kFail; });
}

}  // namespace charkit
