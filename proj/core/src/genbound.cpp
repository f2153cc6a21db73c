#include "ctkit/genbound.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctkit/classmult.hpp"
#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

using json = nlohmann::ordered_json;

void require_outer_involution(const CharacterTable& table, int x,
                              const std::set<int>& socle) {
  const ClassInfo& info = table.class_info(x);
  if (info.element_order != 2) {
    throw DataError("not-an-involution: class " + info.name + " of table " +
                    table.name() + " has element order " +
                    std::to_string(info.element_order));
  }
  if (socle.count(x) != 0) {
    throw DataError("not-outer: class " + info.name + " of table " +
                    table.name() + " lies inside the socle");
  }
}

void require_names_resolve(const CharacterTable& table,
                           const std::set<std::string>& names) {
  for (const std::string& name : names) class_by_name(table, name);
}

}  // namespace

std::vector<Witness> find_odd_witnesses(const CharacterTable& table, int x,
                                        const std::set<std::string>& excluded) {
  const std::set<int> socle = socle_classes(table);
  require_outer_involution(table, x, socle);
  require_names_resolve(table, excluded);

  std::vector<Witness> witnesses;
  for (int y : odd_order_nonidentity_classes(table)) {
    const ClassInfo& info = table.class_info(y);
    if (excluded.count(info.name) != 0) continue;
    const Integer coefficient = mult_coefficient(table, x, x, y).value;
    if (sgn(coefficient) <= 0) continue;
    // Odd-order elements of an index-2 extension always lie in the socle;
    // a violation means the table is inconsistent.
    if (socle.count(y) == 0) {
      throw ConsistencyError("witness class " + info.name + " of table " +
                             table.name() + " lies outside the socle");
    }
    witnesses.push_back(Witness{y, info.name, coefficient});
  }
  std::sort(witnesses.begin(), witnesses.end(),
            [&table](const Witness& a, const Witness& b) {
              const int oa = table.class_info(a.class_index).element_order;
              const int ob = table.class_info(b.class_index).element_order;
              if (oa != ob) return oa < ob;
              return a.class_name < b.class_name;
            });
  return witnesses;
}

GenBoundReport alpha_upper_bound(const CharacterTable& table, int x,
                                 const std::set<std::string>& excluded) {
  GenBoundReport report;
  report.group = table.name();
  report.class_name = table.class_info(x).name;
  report.witnesses = find_odd_witnesses(table, x, excluded);
  // Two involutions only ever generate a solvable group, hence >= 3.
  report.lower_bound = 3;
  report.reasoning.push_back(kRuleInvolutionLowerBound);
  if (!report.witnesses.empty()) {
    report.upper_bound = 4;
    report.reasoning.push_back(kRuleOddWitnessUpperBound);
  } else {
    report.reasoning.push_back(kRuleNoConclusion);
  }
  return report;
}

std::vector<int> reduce_composite(const CharacterTable& table, int x) {
  const int order = table.class_info(x).element_order;
  bool prime = order >= 2;
  for (int p = 2; p * p <= order; ++p) {
    if (order % p == 0 && order != p) {
      prime = false;
      break;
    }
  }
  if (order == 1 || prime) {
    throw DataError("reduce_composite: class " + table.class_info(x).name +
                    " has order " + std::to_string(order) +
                    ", which is not composite");
  }
  // Exponents k with x^k of prime order q are the multiples k = (order/q) j,
  // 0 < j < q; walk them all and dedupe in table order.
  std::set<int> seen;
  for (int q = 2; q <= order; ++q) {
    if (order % q != 0) continue;
    bool q_prime = true;
    for (int p = 2; p * p <= q; ++p) {
      if (q % p == 0) {
        q_prime = false;
        break;
      }
    }
    if (!q_prime) continue;
    for (int j = 1; j < q; ++j) {
      seen.insert(power_class(table, x, static_cast<long long>(order / q) * j));
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<int> check_order4_squares(const CharacterTable& table,
                                      const std::set<std::string>& targets) {
  std::set<int> target_indices;
  for (const std::string& name : targets) {
    target_indices.insert(class_by_name(table, name));
  }
  std::vector<int> result;
  for (int c = 0; c < table.num_classes(); ++c) {
    if (table.class_info(c).element_order != 4) continue;
    if (target_indices.count(power_class(table, c, 2)) != 0) result.push_back(c);
  }
  return result;
}

CampaignConfig parse_campaign(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("campaign config: ") + e.what());
  }
  const auto fail = [](const std::string& message) -> void {
    throw ParseError("campaign config: " + message);
  };
  if (!doc.is_object()) fail("top level must be an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "format_version" && item.key() != "entries") {
      fail("unknown key '" + item.key() + "'");
    }
  }
  if (!doc.contains("format_version") ||
      !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<long long>() != 1) {
    fail("unsupported format_version");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    fail("missing entries array");
  }
  const auto string_list = [&fail](const json& value,
                                   const std::string& context) {
    if (!value.is_array()) fail(context + ": expected an array of strings");
    std::vector<std::string> items;
    for (const json& item : value) {
      if (!item.is_string()) fail(context + ": expected an array of strings");
      items.push_back(item.get<std::string>());
    }
    return items;
  };
  CampaignConfig config;
  for (size_t i = 0; i < doc["entries"].size(); ++i) {
    const json& entry = doc["entries"][i];
    const std::string context = "entries[" + std::to_string(i) + "]";
    if (!entry.is_object()) fail(context + ": expected an object");
    for (const auto& item : entry.items()) {
      if (item.key() != "group" && item.key() != "table" &&
          item.key() != "targets" && item.key() != "excluded" &&
          item.key() != "power_check" && item.key() != "expect_upper_bound") {
        fail(context + ": unknown key '" + item.key() + "'");
      }
    }
    CampaignEntry parsed;
    if (!entry.contains("group") || !entry["group"].is_string()) {
      fail(context + ": missing group name");
    }
    parsed.group = entry["group"].get<std::string>();
    if (!entry.contains("table") || !entry["table"].is_string()) {
      fail(context + ": missing table path");
    }
    parsed.table_path = entry["table"].get<std::string>();
    if (!entry.contains("targets")) fail(context + ": missing targets");
    parsed.targets = string_list(entry["targets"], context + ".targets");
    if (entry.contains("excluded")) {
      parsed.excluded = string_list(entry["excluded"], context + ".excluded");
    }
    if (entry.contains("power_check")) {
      const json& check = entry["power_check"];
      if (!check.is_object()) fail(context + ".power_check: expected an object");
      for (const auto& item : check.items()) {
        if (item.key() != "targets" && item.key() != "expect_empty") {
          fail(context + ".power_check: unknown key '" + item.key() + "'");
        }
      }
      PowerCheckConfig power;
      if (!check.contains("targets")) {
        fail(context + ".power_check: missing targets");
      }
      power.targets = string_list(check["targets"], context + ".power_check.targets");
      if (check.contains("expect_empty")) {
        if (!check["expect_empty"].is_boolean()) {
          fail(context + ".power_check.expect_empty: expected a boolean");
        }
        power.expect_empty = check["expect_empty"].get<bool>();
      }
      parsed.power_check = std::move(power);
    }
    if (entry.contains("expect_upper_bound")) {
      if (!entry["expect_upper_bound"].is_number_integer()) {
        fail(context + ".expect_upper_bound: expected an integer");
      }
      parsed.expect_upper_bound =
          static_cast<int>(entry["expect_upper_bound"].get<long long>());
    }
    config.entries.push_back(std::move(parsed));
  }
  return config;
}

bool CampaignResult::all_expectations_met() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CampaignEntryResult& e) {
                       return e.expectations_met;
                     });
}

bool CampaignResult::any_error() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const CampaignEntryResult& e) {
                       return e.status == EntryStatus::kError;
                     });
}

TableLoader file_table_loader(const std::vector<std::string>& base_dirs) {
  return [base_dirs](const std::string& path) -> std::optional<std::string> {
    namespace fs = std::filesystem;
    std::vector<fs::path> candidates;
    if (fs::path(path).is_absolute()) {
      candidates.emplace_back(path);
    } else {
      for (const std::string& base : base_dirs) {
        candidates.emplace_back(base.empty() ? fs::path(path)
                                             : fs::path(base) / path);
      }
    }
    for (const fs::path& candidate : candidates) {
      std::error_code ec;
      if (!fs::exists(candidate, ec) || ec) continue;
      std::ifstream in(candidate, std::ios::binary);
      if (!in) continue;
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }
    return std::nullopt;
  };
}

CampaignResult theorem1_report(const CampaignConfig& config,
                               const TableLoader& loader) {
  CampaignResult result;
  for (const CampaignEntry& entry : config.entries) {
    CampaignEntryResult outcome;
    outcome.group = entry.group;
    const std::optional<std::string> content = loader(entry.table_path);
    if (!content) {
      outcome.status = EntryStatus::kSkipped;
      outcome.message = "table file not found: " + entry.table_path;
      result.entries.push_back(std::move(outcome));
      continue;
    }
    try {
      const CharacterTable table = parse_table(*content);
      const ValidationReport validation = validate(table);
      if (!validation.valid()) {
        std::string failing;
        for (const ValidationCheck& check : validation.checks) {
          if (!check.passed) {
            failing = check.name;
            break;
          }
        }
        throw ConsistencyError("table " + table.name() +
                               " failed validation: " + failing);
      }
      const std::set<std::string> excluded(entry.excluded.begin(),
                                           entry.excluded.end());
      for (const std::string& target : entry.targets) {
        GenBoundReport report =
            alpha_upper_bound(table, class_by_name(table, target), excluded);
        if (entry.expect_upper_bound &&
            (!report.upper_bound ||
             *report.upper_bound != *entry.expect_upper_bound)) {
          outcome.expectations_met = false;
        }
        outcome.reports.push_back(std::move(report));
      }
      if (entry.power_check) {
        PowerCheckResult power;
        power.targets = entry.power_check->targets;
        power.expect_empty = entry.power_check->expect_empty;
        const std::set<std::string> targets(power.targets.begin(),
                                            power.targets.end());
        for (int c : check_order4_squares(table, targets)) {
          power.violations.push_back(table.class_info(c).name);
        }
        power.passed = power.expect_empty ? power.violations.empty()
                                          : !power.violations.empty();
        if (!power.passed) outcome.expectations_met = false;
        outcome.power_check = std::move(power);
      }
    } catch (const Error& e) {
      outcome.status = EntryStatus::kError;
      outcome.message = e.what();
      outcome.expectations_met = false;
    }
    result.entries.push_back(std::move(outcome));
  }
  return result;
}

namespace {

json report_to_json(const GenBoundReport& report) {
  json doc;
  doc["group"] = report.group;
  doc["class"] = report.class_name;
  doc["lower_bound"] =
      report.lower_bound ? json(*report.lower_bound) : json(nullptr);
  doc["upper_bound"] =
      report.upper_bound ? json(*report.upper_bound) : json(nullptr);
  json witnesses = json::array();
  for (const Witness& witness : report.witnesses) {
    json entry;
    entry["class"] = witness.class_name;
    entry["coefficient"] = integer_str(witness.coefficient);
    witnesses.push_back(std::move(entry));
  }
  doc["witnesses"] = std::move(witnesses);
  doc["reasoning"] = report.reasoning;
  return doc;
}

std::string bound_str(const std::optional<int>& bound) {
  return bound ? std::to_string(*bound) : "none";
}

void render_report_lines(const GenBoundReport& report, std::ostream& os,
                         const std::string& indent) {
  os << indent << "group " << report.group << " class " << report.class_name
     << ": lower_bound=" << bound_str(report.lower_bound)
     << " upper_bound=" << bound_str(report.upper_bound) << "\n";
  os << indent << "  rules:";
  for (const std::string& rule : report.reasoning) os << " " << rule;
  os << "\n";
  for (const Witness& witness : report.witnesses) {
    os << indent << "  witness " << witness.class_name << " coefficient "
       << integer_str(witness.coefficient) << "\n";
  }
}

const char* status_str(EntryStatus status) {
  switch (status) {
    case EntryStatus::kOk:
      return "ok";
    case EntryStatus::kSkipped:
      return "skipped";
    case EntryStatus::kError:
      return "error";
  }
  return "unknown";
}

}  // namespace

std::string render_report_text(const GenBoundReport& report) {
  std::ostringstream os;
  render_report_lines(report, os, "");
  return os.str();
}

std::string render_report_json(const GenBoundReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string render_campaign_text(const CampaignResult& result) {
  std::ostringstream os;
  int ok = 0, skipped = 0, errors = 0;
  for (const CampaignEntryResult& entry : result.entries) {
    os << "entry " << entry.group << ": " << status_str(entry.status);
    if (!entry.message.empty()) os << " (" << entry.message << ")";
    os << "\n";
    switch (entry.status) {
      case EntryStatus::kOk:
        ++ok;
        break;
      case EntryStatus::kSkipped:
        ++skipped;
        break;
      case EntryStatus::kError:
        ++errors;
        break;
    }
    for (const GenBoundReport& report : entry.reports) {
      render_report_lines(report, os, "  ");
    }
    if (entry.power_check) {
      const PowerCheckResult& power = *entry.power_check;
      os << "  power-check targets=";
      for (size_t i = 0; i < power.targets.size(); ++i) {
        os << (i ? "," : "") << power.targets[i];
      }
      os << " expect_empty=" << (power.expect_empty ? "yes" : "no") << ": "
         << (power.passed ? "pass" : "FAIL");
      if (!power.violations.empty()) {
        os << " violations=";
        for (size_t i = 0; i < power.violations.size(); ++i) {
          os << (i ? "," : "") << power.violations[i];
        }
      }
      os << "\n";
    }
  }
  os << "summary: entries=" << result.entries.size() << " ok=" << ok
     << " skipped=" << skipped << " error=" << errors << " expectations="
     << (result.all_expectations_met() ? "met" : "NOT-MET") << "\n";
  return os.str();
}

std::string render_campaign_json(const CampaignResult& result) {
  json doc;
  doc["format_version"] = 1;
  json entries = json::array();
  for (const CampaignEntryResult& entry : result.entries) {
    json record;
    record["group"] = entry.group;
    record["status"] = status_str(entry.status);
    if (!entry.message.empty()) record["message"] = entry.message;
    json reports = json::array();
    for (const GenBoundReport& report : entry.reports) {
      reports.push_back(report_to_json(report));
    }
    record["reports"] = std::move(reports);
    if (entry.power_check) {
      const PowerCheckResult& power = *entry.power_check;
      json check;
      check["targets"] = power.targets;
      check["expect_empty"] = power.expect_empty;
      check["violations"] = power.violations;
      check["passed"] = power.passed;
      record["power_check"] = std::move(check);
    }
    record["expectations_met"] = entry.expectations_met;
    entries.push_back(std::move(record));
  }
  doc["entries"] = std::move(entries);
  doc["all_expectations_met"] = result.all_expectations_met();
  return doc.dump(2) + "\n";
}

}  // namespace ctkit
