#include "charkit/render.hpp"

#include <algorithm>
#include <sstream>

namespace charkit {

using nlohmann::json;

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string bool_mark(bool b) { return b ? "yes" : "no"; }

json witness_json(const std::optional<MonomialWitness>& w, const GroupAnalysis& ctx) {
  if (!w) return nullptr;
  const SubgroupRecord& h = ctx.subgroup_classes()[w->subgroup];
  json gens = json::array();
  for (auto g : h.generators()) gens.push_back(ctx.group()->elements()[g].to_cycles());
  return {{"subgroupOrder", h.order()},
          {"generators", gens},
          {"character", to_json(ctx.table_of(h)[w->character])}};
}

}  // namespace

json to_json(const Cyclotomic& value) {
  json terms = json::array();
  auto coeffs = value.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    terms.push_back({{"exp", k},
                     {"num", integer_json(coeffs[k].get_num())},
                     {"den", integer_json(coeffs[k].get_den())}});
  }
  return {{"conductor", value.conductor()}, {"terms", terms}};
}

json to_json(const ClassFunction& chi) {
  json values = json::array();
  for (const auto& v : chi.values()) values.push_back(to_json(v));
  return values;
}

json to_json(const CharacterTable& table) {
  const PermGroup& g = *table.group();
  json classes = json::array();
  for (const auto& cls : table.classes()) {
    classes.push_back({{"rep", cls.representative.to_cycles()},
                       {"size", cls.size},
                       {"elementOrder", cls.element_order}});
  }
  json rows = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    rows.push_back({{"degree", table.degree(i)}, {"values", to_json(table[i])}});
  }
  return {{"group", g.name()},
          {"order", g.order()},
          {"exponent", g.exponent()},
          {"classes", classes},
          {"irreducibles", rows}};
}

json to_json(const ClassificationReport& report, const GroupAnalysis& ctx) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"degree", r.degree},
                    {"primitive", r.primitive},
                    {"quasiPrimitive", r.quasi_primitive},
                    {"fullVanishingOff", r.full_vanishing_off},
                    {"monomialWitness", witness_json(r.monomial, ctx)}});
  }
  return {{"group", report.group},
          {"order", report.order},
          {"derivedIndex", report.derived_index},
          {"rows", rows},
          {"counts",
           {{"pri", report.primitive_count},
            {"qua", report.quasi_primitive_count},
            {"fullV", report.full_vanishing_off_count}}}};
}

json to_json(const CheckResult& result) {
  json out = {{"check", result.check},
              {"group", result.group},
              {"status", std::string(to_string(result.status))},
              {"data", result.data}};
  if (!result.reason.empty()) out["reason"] = result.reason;
  return out;
}

std::string render_text(const CharacterTable& table) {
  const PermGroup& g = *table.group();
  std::ostringstream os;
  os << g.name() << "  order " << g.order() << "  exponent " << g.exponent() << "\n\n";
  const auto& classes = table.classes();
  // Column c holds class c; width fits the longest entry in the column.
  std::vector<std::vector<std::string>> cells(table.size() + 3);
  cells[0].push_back("class");
  cells[1].push_back("size");
  cells[2].push_back("order");
  for (std::size_t c = 0; c < classes.size(); ++c) {
    cells[0].push_back(std::to_string(c + 1));
    cells[1].push_back(std::to_string(classes[c].size));
    cells[2].push_back(std::to_string(classes[c].element_order));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    cells[i + 3].push_back("X." + std::to_string(i + 1));
    for (const auto& v : table[i].values()) cells[i + 3].push_back(v.to_string());
  }
  std::vector<std::size_t> width(classes.size() + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (std::size_t l = 0; l < cells.size(); ++l) {
    if (l == 3) os << "\n";
    std::string line;
    for (std::size_t c = 0; c < cells[l].size(); ++c) line += pad(cells[l][c], width[c] + 2);
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  os << "\nrepresentatives:\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    os << "  " << c + 1 << ": " << classes[c].representative.to_cycles() << "\n";
  }
  return os.str();
}

std::string render_text(const ClassificationReport& report, const GroupAnalysis& ctx) {
  std::ostringstream os;
  os << report.group << "  order " << report.order << "  |G:G'| " << report.derived_index
     << "\n\n";
  os << "row   degree  primitive  quasi  fullV  monomial\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    std::string mono = "no";
    if (r.monomial) {
      mono = "from subgroup of order " +
             std::to_string(ctx.subgroup_classes()[r.monomial->subgroup].order());
    }
    os << pad("X." + std::to_string(i + 1), 6) << pad(std::to_string(r.degree), 8)
       << pad(bool_mark(r.primitive), 11) << pad(bool_mark(r.quasi_primitive), 7)
       << pad(bool_mark(r.full_vanishing_off), 7) << mono << "\n";
  }
  os << "\ncounts: pri=" << report.primitive_count << " qua=" << report.quasi_primitive_count
     << " fullV=" << report.full_vanishing_off_count << "\n";
  return os.str();
}

std::string render_text(const std::vector<CheckResult>& results) {
  std::size_t group_width = 5;
  for (const auto& r : results) group_width = std::max(group_width, r.group.size());
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    std::string line = pad(r.group, group_width + 2) + pad(r.check, 24) +
                       pad(std::string(to_string(r.status)), 9) + r.reason;
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
    switch (r.status) {
      case CheckStatus::kPass: ++pass; break;
      case CheckStatus::kFail: ++fail; break;
      case CheckStatus::kSkipped: ++skipped; break;
    }
  }
  os << "\n" << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  return os.str();
}

std::string render_json_lines(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) out += to_json(r).dump() + "\n";
  return out;
}

}  // namespace charkit
