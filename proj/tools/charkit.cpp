// charkit: character tables, classification of irreducibles and the
// verification sweep from the command line.
//
//   charkit table <group> [--json]
//   charkit classify <group> [--json]
//   charkit verify [--catalog specs] [--check ids|all] [--max-order n] [--json]
//
// Exit status: 0 on success, 1 when a verify check fails, 2 on bad input or
// an exceeded cap.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charkit/catalog.hpp"
#include "charkit/errors.hpp"
#include "charkit/render.hpp"
#include "charkit/verify.hpp"

namespace {

struct Options {
  charkit::Config config;
  bool json = false;
  std::string group;
  std::optional<std::string> catalog;
  std::string checks = "all";
  std::optional<std::uint64_t> max_order;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
  cmd->add_option("--seed", opt.config.seed, "Seed for the table algorithm (env CHARKIT_SEED)");
  cmd->add_option("--element-cap", opt.config.element_cap, "Largest group order to enumerate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--subgroup-cap", opt.config.subgroup_cap,
                  "Largest group order for the subgroup census")
      ->check(CLI::PositiveNumber);
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Catalog entries are comma separated, but so are the generators of a perm:
// spec. A piece without a "name:" or "perm:" prefix continues the previous
// entry.
std::vector<std::string> split_catalog(const std::string& text) {
  std::vector<std::string> specs;
  if (text.empty()) return specs;
  for (auto& piece : split_top_level(text)) {
    const bool starts = piece.rfind("name:", 0) == 0 || piece.rfind("perm:", 0) == 0;
    if (!starts && !specs.empty()) {
      specs.back() += "," + piece;
    } else {
      specs.push_back(piece);
    }
  }
  return specs;
}

int cmd_table(const Options& opt) {
  auto group = charkit::parse_group(opt.group, opt.config);
  auto table = charkit::character_table(group);
  if (opt.json) {
    std::cout << charkit::to_json(table).dump(2) << "\n";
  } else {
    std::cout << charkit::render_text(table);
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  charkit::GroupAnalysis ctx(charkit::parse_group(opt.group, opt.config));
  auto report = charkit::classify_group(ctx);
  if (opt.json) {
    std::cout << charkit::to_json(report, ctx).dump(2) << "\n";
  } else {
    std::cout << charkit::render_text(report, ctx);
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  auto catalog = opt.catalog ? split_catalog(*opt.catalog) : charkit::default_catalog();
  std::vector<std::string> checks;
  for (auto& id : split_top_level(opt.checks)) {
    if (id == "all") {
      checks.insert(checks.end(), charkit::check_ids().begin(), charkit::check_ids().end());
    } else if (!id.empty()) {
      checks.push_back(id);
    }
  }
  auto results = charkit::run_suite(catalog, checks, opt.config, opt.max_order);
  if (opt.json) {
    std::cout << charkit::render_json_lines(results);
  } else {
    std::cout << charkit::render_text(results);
  }
  return charkit::any_failed(results) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("CHARKIT_SEED")) {
    try {
      opt.config.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "charkit: CHARKIT_SEED is not a number: " << env << "\n";
      return 2;
    }
  }

  CLI::App app{"Exact character tables and classification of irreducible characters"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("group", opt.group, "Group spec, e.g. name:S4 or perm:(1 2),(1 2 3)")
      ->required();
  add_common(table, opt);

  auto* classify = app.add_subcommand("classify", "Classify every irreducible character");
  classify->add_option("group", opt.group, "Group spec")->required();
  add_common(classify, opt);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks over a catalog");
  verify->add_option("--catalog", opt.catalog, "Comma-separated group specs");
  verify->add_option("--check", opt.checks, "Check id, comma-separated ids, or all");
  verify->add_option("--max-order", opt.max_order, "Skip groups larger than this");
  add_common(verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*table) return cmd_table(opt);
    if (*classify) return cmd_classify(opt);
    return cmd_verify(opt);
  } catch (const charkit::Error& e) {
    std::cerr << "charkit: " << e.what() << "\n";
    return 2;
  }
}
