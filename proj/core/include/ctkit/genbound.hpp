#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctkit/chartable.hpp"

namespace ctkit {

// Rule tags recorded in the reasoning trail of a report.
inline constexpr const char* kRuleInvolutionLowerBound = "involution-lower-bound";
inline constexpr const char* kRuleOddWitnessUpperBound = "odd-witness-upper-bound";
inline constexpr const char* kRuleNoConclusion = "no-conclusion";

struct Witness {
  int class_index = 0;
  std::string class_name;
  Integer coefficient;
};

// Bounds on alpha_S(x), the minimum number of conjugates of x that generate
// a subgroup containing the socle, together with the witnesses and the
// rules that produced them.
struct GenBoundReport {
  std::string group;
  std::string class_name;
  std::optional<int> lower_bound;
  std::optional<int> upper_bound;
  std::vector<Witness> witnesses;
  std::vector<std::string> reasoning;
};

// All classes y of odd element order >= 3, not excluded by name, with
// m(x,x,y) > 0, ordered by ascending element order then class name. The
// class x must be an involution outside the socle (errors: not-an-involution,
// not-outer); excluded names must resolve in the table. Every witness is
// checked to lie in the socle.
std::vector<Witness> find_odd_witnesses(const CharacterTable& table, int x,
                                        const std::set<std::string>& excluded);

// The bound pipeline for one outer involution class: lower bound 3 by the
// two-involutions rule; upper bound 4 when an acceptable odd witness exists,
// otherwise no conclusion.
GenBoundReport alpha_upper_bound(const CharacterTable& table, int x,
                                 const std::set<std::string>& excluded);

// For x of composite order: the classes of the prime-order powers of x,
// derived through the stored power maps; duplicates removed, table order.
// DataError when the order of x is 1 or prime.
std::vector<int> reduce_composite(const CharacterTable& table, int x);

// All classes of element order 4 whose squares land in one of the target
// classes; an empty result certifies that no such elements exist.
std::vector<int> check_order4_squares(const CharacterTable& table,
                                      const std::set<std::string>& targets);

struct PowerCheckConfig {
  std::vector<std::string> targets;
  bool expect_empty = true;
};

struct CampaignEntry {
  std::string group;
  std::string table_path;
  std::vector<std::string> targets;
  std::vector<std::string> excluded;
  std::optional<PowerCheckConfig> power_check;
  std::optional<int> expect_upper_bound;
};

struct CampaignConfig {
  std::vector<CampaignEntry> entries;
};

CampaignConfig parse_campaign(const std::string& text);

struct PowerCheckResult {
  std::vector<std::string> targets;
  bool expect_empty = true;
  std::vector<std::string> violations;
  bool passed = false;
};

enum class EntryStatus { kOk, kSkipped, kError };

struct CampaignEntryResult {
  std::string group;
  EntryStatus status = EntryStatus::kOk;
  std::string message;  // skip or error reason
  std::vector<GenBoundReport> reports;
  std::optional<PowerCheckResult> power_check;
  bool expectations_met = true;
};

struct CampaignResult {
  std::vector<CampaignEntryResult> entries;

  bool all_expectations_met() const;
  bool any_error() const;
};

// Loads a table file's content by path; nullopt marks the file as absent,
// which turns the entry into a skip rather than a failure.
using TableLoader =
    std::function<std::optional<std::string>(const std::string& path)>;

// A loader that tries each base directory in turn (empty base = the path as
// given) and returns the first existing file.
TableLoader file_table_loader(const std::vector<std::string>& base_dirs);

// Runs the full pipeline over every configured entry: load, validate,
// alpha_upper_bound per target class, plus the optional order-4 power
// check. Entries with missing tables are skipped; entries that fail keep
// the remaining entries running. Results follow config order.
CampaignResult theorem1_report(const CampaignConfig& config,
                               const TableLoader& loader);

std::string render_report_text(const GenBoundReport& report);
std::string render_report_json(const GenBoundReport& report);
std::string render_campaign_text(const CampaignResult& result);
std::string render_campaign_json(const CampaignResult& result);

}  // namespace ctkit
