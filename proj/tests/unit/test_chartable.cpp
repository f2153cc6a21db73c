#include <doctest.h>

#include <numeric>
#include <set>

#include "ctkit/chartable.hpp"
#include "ctkit/errors.hpp"
#include "paths.hpp"

using namespace ctkit;
using ctkit_test::read_data_file;

namespace {

CharacterTable load(const std::string& name) {
  return parse_table(read_data_file("tables/" + name + ".json"));
}

const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names{"c3", "s3", "d8",  "q8",  "s4",
                                              "a5", "s5", "d12", "d14", "d18"};
  return names;
}

}  // namespace

TEST_CASE("bundled tables parse with the expected shape") {
  const CharacterTable s4 = load("s4");
  CHECK(s4.name() == "S4");
  CHECK(s4.group_order() == Integer(24));
  CHECK(s4.num_classes() == 5);
  CHECK(s4.num_characters() == 5);
  CHECK(s4.class_info(0).name == "1A");
  CHECK(s4.class_size(2) == Integer(6));
  CHECK(s4.socle_annotation().has_value());

  const CharacterTable c3 = load("c3");
  CHECK(c3.num_classes() == 3);
  CHECK(c3.group_order() == Integer(3));
  CHECK(c3.value(1, 1).conductor() == 3);
  CHECK(c3.value(1, 1) == root_of_unity(3, 1));
}

TEST_CASE("parse errors carry context") {
  // centralizer order must divide the group order
  CHECK_THROWS_WITH_AS(
      parse_table(read_data_file("tables/bad/s4_centralizer_7.json")),
      doctest::Contains("does not divide"), ParseError);

  const std::string good = read_data_file("tables/s4.json");

  auto expect_parse_error = [](std::string text, const char* needle) {
    CAPTURE(needle);
    CHECK_THROWS_WITH_AS(parse_table(text), doctest::Contains(needle),
                         ParseError);
  };

  expect_parse_error("{", "character table");
  expect_parse_error("[1,2]", "top level");

  std::string dup = good;
  const size_t pos = dup.find("\"2B\"");
  dup.replace(pos, 4, "\"2A\"");
  expect_parse_error(dup, "duplicate class name");

  std::string bad_rational = good;
  bad_rational.replace(bad_rational.find("\"-1\""), 4, "\"2/4\"");
  expect_parse_error(bad_rational, "non-canonical");

  std::string bad_version = good;
  bad_version.replace(bad_version.find("\"format_version\": 1"), 19,
                      "\"format_version\": 2");
  expect_parse_error(bad_version, "format_version");

  std::string bad_index = good;
  bad_index.replace(bad_index.find("{ \"2\": 0, \"3\": 1 }"), 18,
                    "{ \"2\": 9, \"3\": 1 }");
  expect_parse_error(bad_index, "out of range");

  std::string bad_prime = good;
  bad_prime.replace(bad_prime.find("{ \"2\": 0, \"3\": 1 }"), 18,
                    "{ \"4\": 0, \"3\": 1 }");
  expect_parse_error(bad_prime, "not a prime");

  std::string prime_not_dividing = good;
  prime_not_dividing.replace(prime_not_dividing.find("{ \"2\": 0, \"3\": 1 }"),
                             18, "{ \"5\": 0, \"3\": 1 }");
  expect_parse_error(prime_not_dividing, "does not divide");

  std::string unknown_key = good;
  unknown_key.replace(unknown_key.find("\"socle\""), 7, "\"sicle\"");
  expect_parse_error(unknown_key, "unknown key");

  // the identity class must come first
  std::string swapped = good;
  const std::string identity_row =
      "{ \"name\": \"1A\", \"element_order\": 1, \"centralizer_order\": \"24\", \"power_maps\": { \"2\": 0, \"3\": 0 } }";
  const std::string order2_row =
      "{ \"name\": \"9Z\", \"element_order\": 2, \"centralizer_order\": \"24\", \"power_maps\": { \"2\": 0, \"3\": 0 } }";
  swapped.replace(swapped.find(identity_row), identity_row.size(), order2_row);
  expect_parse_error(swapped, "identity class");
}

TEST_CASE("round-trip: parse, serialize, parse is the identity") {
  for (const std::string& name : bundled_names()) {
    CAPTURE(name);
    const CharacterTable table = load(name);
    const std::string serialized = serialize_table(table);
    const CharacterTable reparsed = parse_table(serialized);
    CHECK(reparsed == table);
    // canonical output is a fixed point
    CHECK(serialize_table(reparsed) == serialized);
  }
}

TEST_CASE("all bundled tables validate") {
  for (const std::string& name : bundled_names()) {
    CAPTURE(name);
    const ValidationReport report = validate(load(name));
    for (const ValidationCheck& check : report.checks) {
      CAPTURE(check.name);
      CHECK_MESSAGE(check.passed, check.detail);
    }
    CHECK(report.valid());
  }
}

TEST_CASE("perturbed tables fail the named validation check") {
  const auto failing_check = [](const std::string& file,
                                const char* check_name) {
    const ValidationReport report =
        validate(parse_table(read_data_file("tables/bad/" + file)));
    REQUIRE(!report.valid());
    const ValidationCheck* check = report.find(check_name);
    REQUIRE(check != nullptr);
    return check->passed;
  };

  CHECK(!failing_check("s4_neg_value.json", kCheckFirstOrthogonality));
  CHECK(!failing_check("s4_bad_powermap.json", kCheckPowerMapConsistency));
  CHECK(!failing_check("s4_bad_centralizer_sum.json", kCheckCentralizerSum));
  CHECK(!failing_check("s4_wrong_degree.json", kCheckDegreeSquareSum));
  CHECK(!failing_check("s4_no_trivial.json", kCheckTrivialCharacter));
  CHECK(!failing_check("s4_wrong_socle.json", kCheckSocleAnnotation));

  // unperturbed checks still pass alongside the broken one
  const ValidationReport socle_report =
      validate(parse_table(read_data_file("tables/bad/s4_wrong_socle.json")));
  CHECK(socle_report.find(kCheckFirstOrthogonality)->passed);
  CHECK(socle_report.find(kCheckDegreeSquareSum)->passed);
}

TEST_CASE("class lookup by name") {
  const CharacterTable s4 = load("s4");
  CHECK(class_by_name(s4, "1A") == 0);
  CHECK(class_by_name(s4, "4A") == 4);
  CHECK_THROWS_AS(class_by_name(s4, "9Z"), DataError);
}

TEST_CASE("power classes compose stored prime maps") {
  const CharacterTable s4 = load("s4");
  const int c4a = class_by_name(s4, "4A");
  CHECK(power_class(s4, c4a, 2) == class_by_name(s4, "2A"));
  CHECK(power_class(s4, c4a, 4) == 0);
  CHECK(power_class(s4, c4a, 6) == power_class(s4, c4a, 2));
  CHECK(power_class(s4, c4a, 0) == 0);
  CHECK(power_class(s4, c4a, 3) == c4a);

  for (const std::string& name : bundled_names()) {
    CAPTURE(name);
    const CharacterTable table = load(name);
    for (int c = 0; c < table.num_classes(); ++c) {
      CHECK(power_class(table, c, table.class_info(c).element_order) == 0);
    }
  }

  // C3 stores no 2-power map, so squaring must report the gap
  const CharacterTable c3 = load("c3");
  CHECK_THROWS_WITH_AS(power_class(c3, 1, 2),
                       doctest::Contains("no stored power map"), DataError);
  CHECK_THROWS_AS(power_class(c3, 1, -1), DataError);
}

TEST_CASE("stored prime maps commute on valid tables") {
  for (const std::string& name : bundled_names()) {
    CAPTURE(name);
    const CharacterTable table = load(name);
    std::vector<int> primes;
    for (const auto& [p, target] : table.class_info(0).power_maps) {
      primes.push_back(p);
    }
    for (int c = 0; c < table.num_classes(); ++c) {
      for (int p : primes) {
        for (int q : primes) {
          const int via_p = power_class(table, power_class(table, c, p), q);
          const int via_q = power_class(table, power_class(table, c, q), p);
          CAPTURE(c);
          CAPTURE(p);
          CAPTURE(q);
          CHECK(via_p == via_q);
          CHECK(via_p == power_class(table, c, static_cast<long long>(p) * q));
        }
      }
    }
  }
}

TEST_CASE("inverse classes") {
  const CharacterTable s4 = load("s4");
  for (int c = 0; c < s4.num_classes(); ++c) {
    CHECK(inverse_class(s4, c) == c);  // all S4 characters are rational
  }
  const CharacterTable c3 = load("c3");
  CHECK(inverse_class(c3, 0) == 0);
  CHECK(inverse_class(c3, 1) == 2);
  CHECK(inverse_class(c3, 2) == 1);

  // involution preserving order and centralizer, on every bundled table
  for (const std::string& name : bundled_names()) {
    CAPTURE(name);
    const CharacterTable table = load(name);
    for (int c = 0; c < table.num_classes(); ++c) {
      const int inv = inverse_class(table, c);
      CHECK(inverse_class(table, inv) == c);
      CHECK(table.class_info(inv).element_order ==
            table.class_info(c).element_order);
      CHECK(table.class_info(inv).centralizer_order ==
            table.class_info(c).centralizer_order);
    }
  }
}

TEST_CASE("socle classes from the nontrivial linear character") {
  const CharacterTable s4 = load("s4");
  const std::set<int> socle = socle_classes(s4);
  CHECK(socle == std::set<int>{0, 1, 3});  // 1A, 2A, 3A

  const CharacterTable s5 = load("s5");
  std::set<std::string> names;
  for (int c : socle_classes(s5)) names.insert(s5.class_info(c).name);
  CHECK(names == std::set<std::string>{"1A", "2B", "3A", "5A"});

  // simple or wrong linear structure is a refusal, not a guess
  CHECK_THROWS_AS(socle_classes(load("a5")), DataError);
  CHECK_THROWS_AS(socle_classes(load("d8")), DataError);
  CHECK_THROWS_AS(socle_classes(load("c3")), DataError);
  CHECK_THROWS_AS(socle_classes(load("d12")), DataError);

  // the socle contains the identity and every odd-order class
  for (const std::string& name : {"s3", "s4", "s5"}) {
    CAPTURE(name);
    const CharacterTable table = load(name);
    const std::set<int> derived = socle_classes(table);
    CHECK(derived.count(0) == 1);
    for (int c : odd_order_nonidentity_classes(table)) {
      CHECK(derived.count(c) == 1);
    }
  }
}

TEST_CASE("odd-order nonidentity classes in table order") {
  const CharacterTable s4 = load("s4");
  CHECK(odd_order_nonidentity_classes(s4) == std::vector<int>{3});
  CHECK(odd_order_nonidentity_classes(load("c3")) == std::vector<int>{1, 2});
  CHECK(odd_order_nonidentity_classes(load("d8")).empty());
  CHECK(odd_order_nonidentity_classes(load("q8")).empty());
  CHECK(odd_order_nonidentity_classes(load("s5")) == std::vector<int>{3, 5});
}
