#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "paths.hpp"

using ctkit_test::data_root;

namespace {

struct RunResult {
  int status = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = ctkit::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> with_data(std::vector<std::string> args) {
  args.push_back("--data-dir");
  args.push_back(data_root());
  return args;
}

}  // namespace

TEST_CASE("cmc prints the bare coefficient") {
  const RunResult r =
      run_cli(with_data({"cmc", "--table", "s4", "--a", "2B", "--b", "2B",
                         "--c", "3A"}));
  CHECK(r.status == 0);
  CHECK(r.out == "3\n");
  CHECK(r.err.empty());

  const RunResult identity =
      run_cli(with_data({"cmc", "--table", "s4", "--a", "1A", "--b", "2B",
                         "--c", "3A"}));
  CHECK(identity.status == 0);
  CHECK(identity.out == "0\n");
}

TEST_CASE("tables resolve by path and by manifest name") {
  const RunResult by_path = run_cli(
      {"cmc", "--table", data_root() + "/tables/s4.json", "--a", "2B", "--b",
       "2B", "--c", "3A"});
  CHECK(by_path.status == 0);
  CHECK(by_path.out == "3\n");

  // env variable stands in for --data-dir
  setenv("CTKIT_DATA_DIR", data_root().c_str(), 1);
  const RunResult by_env =
      run_cli({"cmc", "--table", "s4", "--a", "2B", "--b", "2B", "--c", "3A"});
  unsetenv("CTKIT_DATA_DIR");
  CHECK(by_env.status == 0);
  CHECK(by_env.out == "3\n");

  const RunResult unresolved =
      run_cli({"cmc", "--table", "s4", "--a", "2B", "--b", "2B", "--c", "3A"});
  CHECK(unresolved.status == 2);
  CHECK(unresolved.err.find("cannot resolve") != std::string::npos);
}

TEST_CASE("exit codes separate usage errors from mathematical failures") {
  // unknown subcommand / unknown flag / missing required option
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli(with_data({"cmc", "--table", "s4", "--a", "2B", "--b", "2B",
                           "--c", "3A", "--bogus"}))
            .status == 2);
  CHECK(run_cli(with_data({"cmc", "--table", "s4"})).status == 2);
  CHECK(run_cli({}).status == 2);

  // unknown class name is a usage error
  CHECK(run_cli(with_data({"cmc", "--table", "s4", "--a", "9Z", "--b", "2B",
                           "--c", "3A"}))
            .status == 2);

  // an invalid table is a mathematical failure
  const RunResult invalid = run_cli(
      {"validate", "--table", data_root() + "/tables/bad/s4_neg_value.json"});
  CHECK(invalid.status == 1);
  CHECK(invalid.out.find("check first-orthogonality: fail") !=
        std::string::npos);
  CHECK(invalid.out.find("table S4: INVALID") != std::string::npos);

  // a valid one exits 0
  CHECK(run_cli(with_data({"validate", "--table", "s4"})).status == 0);

  // power-check --expect-empty maps violations to exit 1
  CHECK(run_cli(with_data({"power-check", "--table", "s4", "--targets", "2A",
                           "--expect-empty"}))
            .status == 1);
  CHECK(run_cli(with_data({"power-check", "--table", "s4", "--targets", "2B",
                           "--expect-empty"}))
            .status == 0);

  // alpha for a non-involution or inner class refuses with a usage error
  CHECK(run_cli(with_data({"alpha", "--table", "s4", "--x", "3A"})).status == 2);
  CHECK(run_cli(with_data({"alpha", "--table", "s4", "--x", "2A"})).status == 2);

  // help is a success
  CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("structured output is machine-readable") {
  const RunResult r = run_cli(with_data(
      {"alpha", "--table", "s5", "--x", "2A", "--format", "structured"}));
  CHECK(r.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["group"] == "S5");
  CHECK(doc["class"] == "2A");
  CHECK(doc["lower_bound"] == 3);
  CHECK(doc["upper_bound"] == 4);
  CHECK(doc["witnesses"][0]["class"] == "3A");
  CHECK(doc["witnesses"][0]["coefficient"] == "3");

  const RunResult v = run_cli(with_data(
      {"validate", "--table", "s4", "--format", "structured"}));
  const nlohmann::json validation = nlohmann::json::parse(v.out);
  CHECK(validation["valid"] == true);
  CHECK(validation["checks"].is_array());

  const RunResult bad_format = run_cli(with_data(
      {"validate", "--table", "s4", "--format", "yaml"}));
  CHECK(bad_format.status == 2);
}

TEST_CASE("witness exclusions accept repeated and comma-joined flags") {
  const RunResult repeated = run_cli(with_data(
      {"witnesses", "--table", "s5", "--x", "2A", "--exclude", "3A",
       "--exclude", "5A"}));
  CHECK(repeated.status == 0);
  CHECK(repeated.out.empty());

  const RunResult comma = run_cli(with_data(
      {"witnesses", "--table", "s5", "--x", "2A", "--exclude", "3A,5A"}));
  CHECK(comma.status == 0);
  CHECK(comma.out.empty());

  const RunResult open = run_cli(with_data(
      {"witnesses", "--table", "s5", "--x", "2A"}));
  CHECK(open.out == "3A 3\n");
}

TEST_CASE("campaign subcommand wraps the pipeline") {
  const RunResult r = run_cli(with_data(
      {"campaign", "--config", data_root() + "/campaigns/desk.json"}));
  CHECK(r.status == 0);
  CHECK(r.out.find("summary: entries=2 ok=2 skipped=0 error=0") !=
        std::string::npos);

  // missing sporadic tables: skipped entries, successful exit
  const RunResult sporadic = run_cli(with_data(
      {"campaign", "--config", data_root() + "/campaigns/sporadic.json"}));
  CHECK(sporadic.status == 0);
  CHECK(sporadic.out.find("skipped=6") != std::string::npos);

  const RunResult structured = run_cli(with_data(
      {"campaign", "--config", data_root() + "/campaigns/desk.json",
       "--format", "structured"}));
  const nlohmann::json doc = nlohmann::json::parse(structured.out);
  CHECK(doc["all_expectations_met"] == true);
  CHECK(doc["entries"].size() == 2);
}

TEST_CASE("oracle-compare runs fixtures end to end") {
  const RunResult r = run_cli(
      {"oracle-compare", "--fixture", data_root() + "/fixtures/q8.json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("oracle-compare: pass") != std::string::npos);

  const RunResult capped =
      run_cli({"oracle-compare", "--fixture", data_root() + "/fixtures/s5.json",
               "--cap", "10"});
  CHECK(capped.status == 2);
  CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> invocations = {
      with_data({"validate", "--table", "s4"}),
      with_data({"cmc", "--table", "s4", "--a", "2B", "--b", "2B", "--c", "3A"}),
      with_data({"row", "--table", "s4", "--a", "2B", "--b", "2B"}),
      with_data({"classes", "--table", "s5"}),
      with_data({"power", "--table", "s4", "--class", "4A", "--k", "2"}),
      with_data({"socle", "--table", "s5"}),
      with_data({"witnesses", "--table", "s5", "--x", "2A"}),
      with_data({"alpha", "--table", "s5", "--x", "2A"}),
      with_data({"power-check", "--table", "s5", "--targets", "2B"}),
      with_data({"campaign", "--config", data_root() + "/campaigns/desk.json"}),
      {"oracle-compare", "--fixture", data_root() + "/fixtures/s4.json"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args[0]);
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.status == second.status);
    CHECK(first.out == second.out);

    auto structured = args;
    structured.push_back("--format");
    structured.push_back("structured");
    CHECK(run_cli(structured).out == run_cli(structured).out);
  }
}
