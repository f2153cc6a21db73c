#include "ctkit/chartable.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw ParseError("character table: " + message);
}

const json& get_key(const json& object, const char* key,
                    const std::string& context) {
  const auto it = object.find(key);
  if (it == object.end()) fail(context + ": missing key '" + key + "'");
  return *it;
}

void check_keys(const json& object,
                std::initializer_list<std::string_view> allowed,
                const std::string& context) {
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      fail(context + ": unknown key '" + item.key() + "'");
    }
  }
}

long long get_int(const json& value, const std::string& context) {
  if (!value.is_number_integer()) fail(context + ": expected an integer");
  return value.get<long long>();
}

std::string get_string(const json& value, const std::string& context) {
  if (!value.is_string()) fail(context + ": expected a string");
  return value.get<std::string>();
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

Cyclotomic decode_value(const json& value, const std::string& context) {
  if (value.is_string()) {
    try {
      return Cyclotomic(Rational::parse(value.get<std::string>()));
    } catch (const ParseError& e) {
      fail(context + ": " + e.what());
    }
  }
  if (!value.is_object()) {
    fail(context + ": expected a rational string or a conductor/terms record");
  }
  check_keys(value, {"conductor", "terms"}, context);
  const long long conductor =
      get_int(get_key(value, "conductor", context), context + ".conductor");
  if (conductor < 1 || conductor > kMaxConductor) {
    fail(context + ": conductor out of range");
  }
  const json& terms = get_key(value, "terms", context);
  if (!terms.is_array()) fail(context + ".terms: expected an array");
  std::vector<std::pair<int, Rational>> parsed;
  long long previous = -1;
  for (const json& term : terms) {
    if (!term.is_array() || term.size() != 2) {
      fail(context + ".terms: each term must be an [exponent, rational] pair");
    }
    const long long exponent = get_int(term[0], context + ".terms");
    if (exponent < 0 || exponent >= conductor) {
      fail(context + ".terms: exponent " + std::to_string(exponent) +
           " out of range for conductor " + std::to_string(conductor));
    }
    if (exponent <= previous) {
      fail(context + ".terms: exponents must be strictly increasing");
    }
    previous = exponent;
    Rational coefficient;
    try {
      coefficient = Rational::parse(get_string(term[1], context + ".terms"));
    } catch (const ParseError& e) {
      fail(context + ".terms: " + e.what());
    }
    if (coefficient.is_zero()) {
      fail(context + ".terms: zero coefficients must be omitted");
    }
    parsed.emplace_back(static_cast<int>(exponent), coefficient);
  }
  return Cyclotomic::from_terms(static_cast<int>(conductor), parsed);
}

json encode_value(const Cyclotomic& value) {
  if (value.conductor() == 1) return json(value.coeff(0).str());
  json terms = json::array();
  for (const auto& [exponent, coefficient] : value.terms()) {
    terms.push_back(json::array({exponent, coefficient.str()}));
  }
  json record;
  record["conductor"] = value.conductor();
  record["terms"] = std::move(terms);
  return record;
}

bool same_representation(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor() == b.conductor() && a.terms() == b.terms();
}

bool is_rational_value(const Cyclotomic& value, const Rational& expected) {
  const auto rational = try_rational(value);
  return rational.has_value() && *rational == expected;
}

}  // namespace

bool operator==(const ClassInfo& a, const ClassInfo& b) {
  return a.name == b.name && a.element_order == b.element_order &&
         a.centralizer_order == b.centralizer_order &&
         a.power_maps == b.power_maps;
}

CharacterTable::CharacterTable(
    std::string name, Integer group_order, std::vector<ClassInfo> classes,
    std::vector<std::vector<Cyclotomic>> irreducibles,
    std::optional<std::vector<std::string>> socle_annotation)
    : name_(std::move(name)),
      group_order_(std::move(group_order)),
      classes_(std::move(classes)),
      irreducibles_(std::move(irreducibles)),
      socle_annotation_(std::move(socle_annotation)) {
  if (name_.empty()) fail("name must be nonempty");
  if (sgn(group_order_) <= 0) fail("group order must be positive");
  if (classes_.empty()) fail("at least one class is required");
  const int count = static_cast<int>(classes_.size());
  std::set<std::string> names;
  for (const ClassInfo& info : classes_) {
    if (info.name.empty()) fail("class names must be nonempty");
    if (!names.insert(info.name).second) {
      fail("duplicate class name '" + info.name + "'");
    }
    if (info.element_order < 1) fail("element orders must be positive");
    if (sgn(info.centralizer_order) <= 0) {
      fail("centralizer orders must be positive");
    }
    if (group_order_ % info.centralizer_order != 0) {
      fail("centralizer_order " + integer_str(info.centralizer_order) +
           " of class " + info.name + " does not divide the group order");
    }
    for (const auto& [prime, target] : info.power_maps) {
      if (!is_prime(prime)) {
        fail("power map key " + std::to_string(prime) + " of class " +
             info.name + " is not prime");
      }
      if (group_order_ % prime != 0) {
        fail("power map prime " + std::to_string(prime) + " of class " +
             info.name + " does not divide the group order");
      }
      if (target < 0 || target >= count) {
        fail("power map of class " + info.name + " points at class index " +
             std::to_string(target) + ", out of range");
      }
    }
  }
  if (classes_[0].element_order != 1) {
    fail("the identity class must be index 0");
  }
  if (classes_[0].centralizer_order != group_order_) {
    fail("the identity class centralizer must equal the group order");
  }
  if (static_cast<int>(irreducibles_.size()) != count) {
    fail("expected " + std::to_string(count) + " irreducible characters, got " +
         std::to_string(irreducibles_.size()));
  }
  for (const auto& row : irreducibles_) {
    if (static_cast<int>(row.size()) != count) {
      fail("each character row must have one value per class");
    }
  }
  if (socle_annotation_) {
    for (const std::string& member : *socle_annotation_) {
      if (names.find(member) == names.end()) {
        fail("socle annotation names unknown class '" + member + "'");
      }
    }
  }
}

const ClassInfo& CharacterTable::class_info(int index) const {
  if (index < 0 || index >= num_classes()) {
    throw DataError("class index " + std::to_string(index) +
                    " out of range for table " + name_);
  }
  return classes_[index];
}

const Cyclotomic& CharacterTable::value(int character, int class_index) const {
  if (character < 0 || character >= num_characters() || class_index < 0 ||
      class_index >= num_classes()) {
    throw DataError("character value index out of range for table " + name_);
  }
  return irreducibles_[character][class_index];
}

Integer CharacterTable::class_size(int index) const {
  return group_order_ / class_info(index).centralizer_order;
}

bool operator==(const CharacterTable& a, const CharacterTable& b) {
  if (a.name() != b.name() || a.group_order() != b.group_order() ||
      !(a.classes() == b.classes()) ||
      a.socle_annotation() != b.socle_annotation() ||
      a.num_characters() != b.num_characters()) {
    return false;
  }
  for (int i = 0; i < a.num_characters(); ++i) {
    for (int c = 0; c < a.num_classes(); ++c) {
      if (!same_representation(a.value(i, c), b.value(i, c))) return false;
    }
  }
  return true;
}

CharacterTable parse_table(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("character table: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  check_keys(doc,
             {"format_version", "name", "group_order", "classes",
              "irreducibles", "socle"},
             "table");
  if (get_int(get_key(doc, "format_version", "table"), "format_version") != 1) {
    fail("unsupported format_version");
  }
  const std::string name = get_string(get_key(doc, "name", "table"), "name");
  Integer group_order;
  try {
    group_order =
        parse_integer(get_string(get_key(doc, "group_order", "table"), "group_order"));
  } catch (const ParseError& e) {
    fail(std::string("group_order: ") + e.what());
  }

  const json& classes = get_key(doc, "classes", "table");
  if (!classes.is_array() || classes.empty()) {
    fail("classes must be a nonempty array");
  }
  const int count = static_cast<int>(classes.size());
  std::vector<ClassInfo> infos;
  infos.reserve(classes.size());
  for (int i = 0; i < count; ++i) {
    const std::string context = "classes[" + std::to_string(i) + "]";
    const json& entry = classes[i];
    if (!entry.is_object()) fail(context + ": expected an object");
    check_keys(entry, {"name", "element_order", "centralizer_order", "power_maps"},
               context);
    ClassInfo info;
    info.name = get_string(get_key(entry, "name", context), context + ".name");
    const long long order =
        get_int(get_key(entry, "element_order", context), context + ".element_order");
    if (order < 1 || order > kMaxConductor) {
      fail(context + ".element_order: out of range");
    }
    info.element_order = static_cast<int>(order);
    try {
      info.centralizer_order = parse_integer(get_string(
          get_key(entry, "centralizer_order", context), context + ".centralizer_order"));
    } catch (const ParseError& e) {
      fail(context + ".centralizer_order: " + e.what());
    }
    const json& maps = get_key(entry, "power_maps", context);
    if (!maps.is_object()) fail(context + ".power_maps: expected an object");
    for (const auto& item : maps.items()) {
      Integer prime;
      try {
        prime = parse_integer(item.key());
      } catch (const ParseError&) {
        fail(context + ".power_maps: key '" + item.key() + "' is not a prime");
      }
      if (prime < 2 || prime > kMaxConductor || !is_prime(prime.get_si())) {
        fail(context + ".power_maps: key '" + item.key() + "' is not a prime");
      }
      const long long target =
          get_int(item.value(), context + ".power_maps['" + item.key() + "']");
      if (target < 0 || target >= count) {
        fail(context + ".power_maps['" + item.key() + "']: class index " +
             std::to_string(target) + " out of range");
      }
      info.power_maps[static_cast<int>(prime.get_si())] =
          static_cast<int>(target);
    }
    infos.push_back(std::move(info));
  }

  const json& irreducibles = get_key(doc, "irreducibles", "table");
  if (!irreducibles.is_array()) fail("irreducibles must be an array");
  std::vector<std::vector<Cyclotomic>> matrix;
  matrix.reserve(irreducibles.size());
  for (size_t i = 0; i < irreducibles.size(); ++i) {
    const json& row = irreducibles[i];
    const std::string context = "irreducibles[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(context + ": expected an array");
    std::vector<Cyclotomic> values;
    values.reserve(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
      values.push_back(
          decode_value(row[j], context + "[" + std::to_string(j) + "]"));
    }
    matrix.push_back(std::move(values));
  }

  std::optional<std::vector<std::string>> socle;
  if (doc.contains("socle")) {
    const json& annotation = doc["socle"];
    if (!annotation.is_array()) fail("socle: expected an array of class names");
    std::vector<std::string> members;
    for (const json& member : annotation) {
      members.push_back(get_string(member, "socle"));
    }
    socle = std::move(members);
  }

  return CharacterTable(name, std::move(group_order), std::move(infos),
                        std::move(matrix), std::move(socle));
}

std::string serialize_table(const CharacterTable& table) {
  json doc;
  doc["format_version"] = 1;
  doc["name"] = table.name();
  doc["group_order"] = integer_str(table.group_order());
  json classes = json::array();
  for (const ClassInfo& info : table.classes()) {
    json entry;
    entry["name"] = info.name;
    entry["element_order"] = info.element_order;
    entry["centralizer_order"] = integer_str(info.centralizer_order);
    json maps;
    for (const auto& [prime, target] : info.power_maps) {
      maps[std::to_string(prime)] = target;
    }
    entry["power_maps"] = std::move(maps);
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  json matrix = json::array();
  for (const auto& row : table.irreducibles()) {
    json values = json::array();
    for (const Cyclotomic& value : row) values.push_back(encode_value(value));
    matrix.push_back(std::move(values));
  }
  doc["irreducibles"] = std::move(matrix);
  if (table.socle_annotation()) doc["socle"] = *table.socle_annotation();
  return doc.dump(2) + "\n";
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const ValidationCheck& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

ValidationReport validate(const CharacterTable& table) {
  ValidationReport report;
  const auto add = [&report](const char* name, bool passed, std::string detail) {
    report.checks.push_back({name, passed, passed ? "" : std::move(detail)});
  };
  const int count = table.num_classes();
  const Rational one(1);

  // trivial character at row 0
  {
    bool trivial = true;
    for (int c = 0; c < count && trivial; ++c) {
      trivial = is_rational_value(table.value(0, c), one);
    }
    add(kCheckTrivialCharacter, trivial,
        "row 0 is not the all-ones trivial character");
  }

  // sum of class sizes
  {
    Integer sum = 0;
    for (int c = 0; c < count; ++c) sum += table.class_size(c);
    add(kCheckCentralizerSum, sum == table.group_order(),
        "class sizes sum to " + integer_str(sum) + ", group order is " +
            integer_str(table.group_order()));
  }

  // sum of squared degrees
  {
    bool ok = true;
    std::string detail;
    Integer sum = 0;
    for (int i = 0; i < table.num_characters(); ++i) {
      const auto degree = try_rational(table.value(i, 0));
      if (!degree || !degree->is_integer() || degree->sign() <= 0) {
        ok = false;
        detail = "character " + std::to_string(i) +
                 " has a degree that is not a positive integer";
        break;
      }
      sum += degree->numerator() * degree->numerator();
    }
    if (ok && sum != table.group_order()) {
      ok = false;
      detail = "squared degrees sum to " + integer_str(sum) +
               ", group order is " + integer_str(table.group_order());
    }
    add(kCheckDegreeSquareSum, ok, std::move(detail));
  }

  std::vector<Cyclotomic> inverse_centralizers;
  inverse_centralizers.reserve(count);
  for (int c = 0; c < count; ++c) {
    inverse_centralizers.push_back(
        Cyclotomic(Rational(Integer(1), table.class_info(c).centralizer_order)));
  }

  // first orthogonality: <chi_i, chi_j> = delta_ij
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < table.num_characters() && ok; ++i) {
      for (int j = i; j < table.num_characters() && ok; ++j) {
        Cyclotomic sum;
        for (int c = 0; c < count; ++c) {
          sum = sum + table.value(i, c) * conjugate(table.value(j, c)) *
                          inverse_centralizers[c];
        }
        const Rational expected = (i == j) ? Rational(1) : Rational(0);
        if (!is_rational_value(sum, expected)) {
          ok = false;
          detail = "characters " + std::to_string(i) + "," + std::to_string(j) +
                   ": inner product is " + sum.str();
        }
      }
    }
    add(kCheckFirstOrthogonality, ok, std::move(detail));
  }

  // second orthogonality: column inner products
  {
    bool ok = true;
    std::string detail;
    for (int g = 0; g < count && ok; ++g) {
      for (int h = g; h < count && ok; ++h) {
        Cyclotomic sum;
        for (int i = 0; i < table.num_characters(); ++i) {
          sum = sum + table.value(i, g) * conjugate(table.value(i, h));
        }
        const Rational expected =
            (g == h) ? Rational(table.class_info(g).centralizer_order)
                     : Rational(0);
        if (!is_rational_value(sum, expected)) {
          ok = false;
          detail = "classes " + table.class_info(g).name + "," +
                   table.class_info(h).name + ": column product is " +
                   sum.str();
        }
      }
    }
    add(kCheckSecondOrthogonality, ok, std::move(detail));
  }

  // power map order consistency
  {
    bool ok = true;
    std::string detail;
    for (int c = 0; c < count && ok; ++c) {
      const ClassInfo& info = table.class_info(c);
      for (const auto& [prime, target] : info.power_maps) {
        const int expected =
            info.element_order / std::gcd(info.element_order, prime);
        if (table.class_info(target).element_order != expected) {
          ok = false;
          detail = "class " + info.name + ": " + std::to_string(prime) +
                   "-th power lands in class " +
                   table.class_info(target).name + " of order " +
                   std::to_string(table.class_info(target).element_order) +
                   ", expected order " + std::to_string(expected);
          break;
        }
      }
    }
    add(kCheckPowerMapConsistency, ok, std::move(detail));
  }

  // socle annotation cross-check against the derived class set
  if (table.socle_annotation()) {
    bool ok = true;
    std::string detail;
    try {
      const std::set<int> derived = socle_classes(table);
      std::set<std::string> derived_names;
      for (int c : derived) derived_names.insert(table.class_info(c).name);
      const std::set<std::string> annotated(table.socle_annotation()->begin(),
                                            table.socle_annotation()->end());
      if (derived_names != annotated) {
        ok = false;
        detail = "annotated socle classes disagree with the derived set";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    add(kCheckSocleAnnotation, ok, std::move(detail));
  }

  return report;
}

int class_by_name(const CharacterTable& table, const std::string& name) {
  for (int c = 0; c < table.num_classes(); ++c) {
    if (table.class_info(c).name == name) return c;
  }
  throw DataError("table " + table.name() + " has no class named '" + name + "'");
}

namespace {

int apply_prime_map(const CharacterTable& table, int class_index, long long prime) {
  const ClassInfo& info = table.class_info(class_index);
  const auto it = info.power_maps.find(static_cast<int>(prime));
  if (it == info.power_maps.end()) {
    throw DataError("class " + info.name + " of table " + table.name() +
                    " has no stored power map for prime " +
                    std::to_string(prime));
  }
  return it->second;
}

}  // namespace

int power_class(const CharacterTable& table, int class_index, long long k) {
  if (k < 0) throw DataError("power_class exponent must be nonnegative");
  const int order = table.class_info(class_index).element_order;
  long long rest = k % order;
  if (rest == 0) return 0;
  int current = class_index;
  for (long long p = 2; p * p <= rest; ++p) {
    while (rest % p == 0) {
      current = apply_prime_map(table, current, p);
      rest /= p;
    }
  }
  if (rest > 1) current = apply_prime_map(table, current, rest);
  return current;
}

int inverse_class(const CharacterTable& table, int class_index) {
  std::vector<Cyclotomic> conjugated;
  conjugated.reserve(table.num_characters());
  for (int i = 0; i < table.num_characters(); ++i) {
    conjugated.push_back(conjugate(table.value(i, class_index)));
  }
  std::vector<int> matches;
  for (int candidate = 0; candidate < table.num_classes(); ++candidate) {
    bool all_equal = true;
    for (int i = 0; i < table.num_characters() && all_equal; ++i) {
      all_equal = (table.value(i, candidate) == conjugated[i]);
    }
    if (all_equal) matches.push_back(candidate);
  }
  if (matches.size() != 1) {
    throw ConsistencyError(
        "inverse class of " + table.class_info(class_index).name +
        " in table " + table.name() + ": expected exactly one match, found " +
        std::to_string(matches.size()));
  }
  return matches[0];
}

std::set<int> socle_classes(const CharacterTable& table) {
  const Rational one(1);
  std::vector<int> linear;
  for (int i = 0; i < table.num_characters(); ++i) {
    if (is_rational_value(table.value(i, 0), one)) linear.push_back(i);
  }
  if (linear.size() != 2) {
    throw DataError("socle detection requires exactly two linear characters; "
                    "table " +
                    table.name() + " has " + std::to_string(linear.size()));
  }
  const auto is_trivial_row = [&table, &one](int row) {
    for (int c = 0; c < table.num_classes(); ++c) {
      if (!is_rational_value(table.value(row, c), one)) return false;
    }
    return true;
  };
  const bool first_trivial = is_trivial_row(linear[0]);
  const bool second_trivial = is_trivial_row(linear[1]);
  if (first_trivial == second_trivial) {
    throw ConsistencyError("table " + table.name() +
                           ": expected exactly one trivial linear character");
  }
  const int lambda = first_trivial ? linear[1] : linear[0];
  std::set<int> result;
  for (int c = 0; c < table.num_classes(); ++c) {
    if (is_rational_value(table.value(lambda, c), one)) result.insert(c);
  }
  return result;
}

std::vector<int> odd_order_nonidentity_classes(const CharacterTable& table) {
  std::vector<int> result;
  for (int c = 0; c < table.num_classes(); ++c) {
    const int order = table.class_info(c).element_order;
    if (order % 2 == 1 && order > 1) result.push_back(c);
  }
  return result;
}

}  // namespace ctkit
