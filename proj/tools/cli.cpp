#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctkit/brute_oracle.hpp"
#include "ctkit/classmult.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/genbound.hpp"

namespace ctkit::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<std::string> effective_data_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CTKIT_DATA_DIR"); env && *env) {
    return std::string(env);
  }
  return std::nullopt;
}

// Splits repeatable name options on commas: --exclude 3A,3B == two flags.
std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> names;
  for (const std::string& item : raw) {
    size_t start = 0;
    while (start <= item.size()) {
      const size_t comma = item.find(',', start);
      const std::string piece = item.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) names.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return names;
}

CharacterTable load_table(const std::string& reference,
                          const std::optional<std::string>& data_dir) {
  const std::optional<std::string> path = resolve_table_path(reference, data_dir);
  if (!path) {
    throw DataError(
        "cannot resolve table reference '" + reference +
        "': not a file, and no data-directory manifest entry matches "
        "(set --data-dir or CTKIT_DATA_DIR)");
  }
  return parse_table(read_file(*path));
}

struct CommonOptions {
  std::string data_dir_flag;
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--data-dir", common.data_dir_flag,
                  "Directory with a manifest.json mapping table names to files "
                  "(default: $CTKIT_DATA_DIR)");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

json check_to_json(const std::string& name, bool passed,
                   const std::string& detail) {
  json entry;
  entry["name"] = name;
  entry["passed"] = passed;
  if (!detail.empty()) entry["detail"] = detail;
  return entry;
}

int cmd_validate(const CommonOptions& common, const std::string& table_ref,
                 std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const ValidationReport report = validate(table);
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    json checks = json::array();
    for (const ValidationCheck& check : report.checks) {
      checks.push_back(check_to_json(check.name, check.passed, check.detail));
    }
    doc["checks"] = std::move(checks);
    doc["valid"] = report.valid();
    out << doc.dump(2) << "\n";
  } else {
    for (const ValidationCheck& check : report.checks) {
      out << "check " << check.name << ": "
          << (check.passed ? "pass" : "fail");
      if (!check.detail.empty()) out << " (" << check.detail << ")";
      out << "\n";
    }
    out << "table " << table.name() << ": "
        << (report.valid() ? "valid" : "INVALID") << "\n";
  }
  return report.valid() ? kExitOk : kExitMathFailure;
}

int cmd_cmc(const CommonOptions& common, const std::string& table_ref,
            const std::string& a, const std::string& b, const std::string& c,
            std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const MultCoefficient m =
      mult_coefficient(table, class_by_name(table, a), class_by_name(table, b),
                       class_by_name(table, c));
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    doc["a"] = a;
    doc["b"] = b;
    doc["c"] = c;
    doc["value"] = integer_str(m.value);
    out << doc.dump(2) << "\n";
  } else {
    out << integer_str(m.value) << "\n";
  }
  return kExitOk;
}

int cmd_row(const CommonOptions& common, const std::string& table_ref,
            const std::string& a, const std::string& b, std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const std::vector<MultCoefficient> row =
      mult_row(table, class_by_name(table, a), class_by_name(table, b));
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    doc["a"] = a;
    doc["b"] = b;
    json coefficients = json::array();
    for (const MultCoefficient& m : row) {
      json entry;
      entry["class"] = table.class_info(m.c).name;
      entry["value"] = integer_str(m.value);
      coefficients.push_back(std::move(entry));
    }
    doc["coefficients"] = std::move(coefficients);
    doc["counting_identity"] = "pass";
    out << doc.dump(2) << "\n";
  } else {
    for (const MultCoefficient& m : row) {
      out << table.class_info(m.c).name << " " << integer_str(m.value) << "\n";
    }
    out << "counting-identity pass\n";
  }
  return kExitOk;
}

int cmd_classes(const CommonOptions& common, const std::string& table_ref,
                std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  std::optional<std::set<int>> socle;
  try {
    socle = socle_classes(table);
  } catch (const Error&) {
    // tables without the index-2 structure simply omit the socle column
  }
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    doc["group_order"] = integer_str(table.group_order());
    json classes = json::array();
    for (int c = 0; c < table.num_classes(); ++c) {
      const ClassInfo& info = table.class_info(c);
      json entry;
      entry["name"] = info.name;
      entry["element_order"] = info.element_order;
      entry["centralizer_order"] = integer_str(info.centralizer_order);
      entry["size"] = integer_str(table.class_size(c));
      json maps;
      for (const auto& [prime, target] : info.power_maps) {
        maps[std::to_string(prime)] = table.class_info(target).name;
      }
      entry["power_maps"] = std::move(maps);
      if (socle) entry["socle"] = socle->count(c) != 0;
      classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);
    out << doc.dump(2) << "\n";
  } else {
    for (int c = 0; c < table.num_classes(); ++c) {
      const ClassInfo& info = table.class_info(c);
      out << info.name << " order=" << info.element_order
          << " size=" << integer_str(table.class_size(c))
          << " centralizer=" << integer_str(info.centralizer_order);
      out << " powers=";
      bool first = true;
      for (const auto& [prime, target] : info.power_maps) {
        out << (first ? "" : ",") << prime << ":"
            << table.class_info(target).name;
        first = false;
      }
      if (socle) out << " socle=" << (socle->count(c) != 0 ? "yes" : "no");
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_power(const CommonOptions& common, const std::string& table_ref,
              const std::string& class_name, long long k, std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const int result = power_class(table, class_by_name(table, class_name), k);
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    doc["class"] = class_name;
    doc["k"] = k;
    doc["result"] = table.class_info(result).name;
    out << doc.dump(2) << "\n";
  } else {
    out << table.class_info(result).name << "\n";
  }
  return kExitOk;
}

int cmd_socle(const CommonOptions& common, const std::string& table_ref,
              std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const std::set<int> socle = socle_classes(table);
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    json names = json::array();
    for (int c : socle) names.push_back(table.class_info(c).name);
    doc["socle"] = std::move(names);
    out << doc.dump(2) << "\n";
  } else {
    for (int c : socle) out << table.class_info(c).name << "\n";
  }
  return kExitOk;
}

int cmd_witnesses(const CommonOptions& common, const std::string& table_ref,
                  const std::string& x, const std::vector<std::string>& excluded,
                  std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const std::vector<std::string> names = split_names(excluded);
  const std::vector<Witness> witnesses = find_odd_witnesses(
      table, class_by_name(table, x), {names.begin(), names.end()});
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    doc["x"] = x;
    doc["excluded"] = names;
    json list = json::array();
    for (const Witness& witness : witnesses) {
      json entry;
      entry["class"] = witness.class_name;
      entry["coefficient"] = integer_str(witness.coefficient);
      list.push_back(std::move(entry));
    }
    doc["witnesses"] = std::move(list);
    out << doc.dump(2) << "\n";
  } else {
    for (const Witness& witness : witnesses) {
      out << witness.class_name << " " << integer_str(witness.coefficient)
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_alpha(const CommonOptions& common, const std::string& table_ref,
              const std::string& x, const std::vector<std::string>& excluded,
              std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const std::vector<std::string> names = split_names(excluded);
  const GenBoundReport report = alpha_upper_bound(
      table, class_by_name(table, x), {names.begin(), names.end()});
  out << (common.structured() ? render_report_json(report)
                              : render_report_text(report));
  return kExitOk;
}

int cmd_power_check(const CommonOptions& common, const std::string& table_ref,
                    const std::vector<std::string>& targets, bool expect_empty,
                    std::ostream& out) {
  const CharacterTable table =
      load_table(table_ref, effective_data_dir(common.data_dir_flag));
  const std::vector<std::string> names = split_names(targets);
  const std::vector<int> hits =
      check_order4_squares(table, {names.begin(), names.end()});
  if (common.structured()) {
    json doc;
    doc["table"] = table.name();
    doc["targets"] = names;
    doc["expect_empty"] = expect_empty;
    json violations = json::array();
    for (int c : hits) violations.push_back(table.class_info(c).name);
    doc["violations"] = std::move(violations);
    doc["passed"] = !expect_empty || hits.empty();
    out << doc.dump(2) << "\n";
  } else {
    for (int c : hits) out << table.class_info(c).name << "\n";
  }
  return (expect_empty && !hits.empty()) ? kExitMathFailure : kExitOk;
}

int cmd_campaign(const CommonOptions& common, const std::string& config_path,
                 std::ostream& out) {
  const CampaignConfig config = parse_campaign(read_file(config_path));
  std::vector<std::string> bases;
  bases.push_back(fs::path(config_path).parent_path().string());
  if (const auto data_dir = effective_data_dir(common.data_dir_flag)) {
    bases.push_back(*data_dir);
  }
  const CampaignResult result = theorem1_report(config, file_table_loader(bases));
  out << (common.structured() ? render_campaign_json(result)
                              : render_campaign_text(result));
  return (result.any_error() || !result.all_expectations_met())
             ? kExitMathFailure
             : kExitOk;
}

int cmd_oracle_compare(const CommonOptions& common,
                       const std::string& fixture_path, long long cap,
                       std::ostream& out) {
  const Fixture fixture = parse_fixture(read_file(fixture_path));
  const fs::path base = fs::path(fixture_path).parent_path();
  const OracleClassData data =
      enumerate(parse_group(read_file((base / fixture.group_path).string())), cap);
  const CharacterTable table =
      parse_table(read_file((base / fixture.table_path).string()));
  const MappingReport report = verify_mapping(data, table, fixture.mapping);
  if (common.structured()) {
    json doc;
    doc["fixture"] = fixture_path;
    doc["group_order"] = data.order();
    json checks = json::array();
    for (const MappingCheck& check : report.checks) {
      checks.push_back(check_to_json(check.name, check.passed, check.detail));
    }
    doc["checks"] = std::move(checks);
    doc["passed"] = report.passed();
    out << doc.dump(2) << "\n";
  } else {
    for (const MappingCheck& check : report.checks) {
      out << "check " << check.name << ": " << (check.passed ? "pass" : "fail");
      if (!check.detail.empty()) out << " (" << check.detail << ")";
      out << "\n";
    }
    out << "oracle-compare: " << (report.passed() ? "pass" : "FAIL") << "\n";
  }
  return report.passed() ? kExitOk : kExitMathFailure;
}

}  // namespace

std::optional<std::string> resolve_table_path(
    const std::string& reference, const std::optional<std::string>& data_dir) {
  std::error_code ec;
  if (fs::exists(reference, ec) && !ec && !fs::is_directory(reference, ec)) {
    return reference;
  }
  if (!data_dir) return std::nullopt;
  const fs::path manifest_path = fs::path(*data_dir) / "manifest.json";
  if (!fs::exists(manifest_path, ec) || ec) return std::nullopt;
  json manifest;
  try {
    manifest = json::parse(read_file(manifest_path.string()));
  } catch (const std::exception& e) {
    throw ParseError("manifest " + manifest_path.string() + ": " + e.what());
  }
  if (!manifest.is_object() || !manifest.contains("format_version") ||
      !manifest["format_version"].is_number_integer() ||
      manifest["format_version"].get<long long>() != 1 ||
      !manifest.contains("tables") || !manifest["tables"].is_object()) {
    throw ParseError("manifest " + manifest_path.string() +
                     ": expected format_version 1 and a tables object");
  }
  const auto it = manifest["tables"].find(reference);
  if (it == manifest["tables"].end() || !it->is_string()) return std::nullopt;
  const fs::path resolved = fs::path(*data_dir) / it->get<std::string>();
  if (!fs::exists(resolved, ec) || ec) return std::nullopt;
  return resolved.string();
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact class-multiplication and generation-bound toolkit for "
               "character tables of finite groups"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string table_ref, class_a, class_b, class_c, class_x, config_path,
      fixture_path;
  std::vector<std::string> excluded, targets;
  long long power_k = 0;
  long long cap = kDefaultEnumerationCap;
  bool expect_empty = false;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Recompute the table consistency checks");
  add_common(validate_cmd, common);
  validate_cmd->add_option("--table", table_ref, "Table path or manifest name")
      ->required();

  CLI::App* cmc_cmd =
      app.add_subcommand("cmc", "One class multiplication coefficient m(a,b,c)");
  add_common(cmc_cmd, common);
  cmc_cmd->add_option("--table", table_ref)->required();
  cmc_cmd->add_option("--a", class_a, "Class name of a")->required();
  cmc_cmd->add_option("--b", class_b, "Class name of b")->required();
  cmc_cmd->add_option("--c", class_c, "Class name of c")->required();

  CLI::App* row_cmd = app.add_subcommand(
      "row", "All coefficients m(a,b,-) with the counting-identity check");
  add_common(row_cmd, common);
  row_cmd->add_option("--table", table_ref)->required();
  row_cmd->add_option("--a", class_a)->required();
  row_cmd->add_option("--b", class_b)->required();

  CLI::App* classes_cmd =
      app.add_subcommand("classes", "List class data of a table");
  add_common(classes_cmd, common);
  classes_cmd->add_option("--table", table_ref)->required();

  CLI::App* power_cmd =
      app.add_subcommand("power", "Class of g^k via stored prime power maps");
  add_common(power_cmd, common);
  power_cmd->add_option("--table", table_ref)->required();
  power_cmd->add_option("--class", class_x, "Class name of g")->required();
  power_cmd->add_option("--k", power_k, "Exponent (nonnegative)")->required();

  CLI::App* socle_cmd = app.add_subcommand(
      "socle", "Classes inside the index-2 subgroup, from the linear character");
  add_common(socle_cmd, common);
  socle_cmd->add_option("--table", table_ref)->required();

  CLI::App* witnesses_cmd = app.add_subcommand(
      "witnesses", "Odd-order classes y with m(x,x,y) > 0, minus exclusions");
  add_common(witnesses_cmd, common);
  witnesses_cmd->add_option("--table", table_ref)->required();
  witnesses_cmd->add_option("--x", class_x, "Outer involution class")->required();
  witnesses_cmd->add_option("--exclude", excluded,
                            "Excluded class names (repeatable or comma-separated)");

  CLI::App* alpha_cmd = app.add_subcommand(
      "alpha", "Generation bounds for one outer involution class");
  add_common(alpha_cmd, common);
  alpha_cmd->add_option("--table", table_ref)->required();
  alpha_cmd->add_option("--x", class_x)->required();
  alpha_cmd->add_option("--exclude", excluded);

  CLI::App* power_check_cmd = app.add_subcommand(
      "power-check", "Order-4 classes whose squares land in target classes");
  add_common(power_check_cmd, common);
  power_check_cmd->add_option("--table", table_ref)->required();
  power_check_cmd->add_option("--targets", targets, "Target class names")
      ->required();
  power_check_cmd->add_flag("--expect-empty", expect_empty,
                            "Exit 1 when any class matches");

  CLI::App* campaign_cmd = app.add_subcommand(
      "campaign", "Run the bound pipeline over a campaign config");
  add_common(campaign_cmd, common);
  campaign_cmd->add_option("--config", config_path, "Campaign config file")
      ->required();

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-compare",
      "Exhaustively cross-check a table against a permutation group");
  add_common(oracle_cmd, common);
  oracle_cmd->add_option("--fixture", fixture_path, "Fixture file")->required();
  oracle_cmd->add_option("--cap", cap, "Enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      return cmd_validate(common, table_ref, out);
    }
    if (app.got_subcommand(cmc_cmd)) {
      return cmd_cmc(common, table_ref, class_a, class_b, class_c, out);
    }
    if (app.got_subcommand(row_cmd)) {
      return cmd_row(common, table_ref, class_a, class_b, out);
    }
    if (app.got_subcommand(classes_cmd)) {
      return cmd_classes(common, table_ref, out);
    }
    if (app.got_subcommand(power_cmd)) {
      return cmd_power(common, table_ref, class_x, power_k, out);
    }
    if (app.got_subcommand(socle_cmd)) {
      return cmd_socle(common, table_ref, out);
    }
    if (app.got_subcommand(witnesses_cmd)) {
      return cmd_witnesses(common, table_ref, class_x, excluded, out);
    }
    if (app.got_subcommand(alpha_cmd)) {
      return cmd_alpha(common, table_ref, class_x, excluded, out);
    }
    if (app.got_subcommand(power_check_cmd)) {
      return cmd_power_check(common, table_ref, targets, expect_empty, out);
    }
    if (app.got_subcommand(campaign_cmd)) {
      return cmd_campaign(common, config_path, out);
    }
    if (app.got_subcommand(oracle_cmd)) {
      return cmd_oracle_compare(common, fixture_path, cap, out);
    }
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand dispatched\n";
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("ctkit");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ctkit::cli
