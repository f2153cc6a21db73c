#include "ctkit/brute_oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <json.hpp>

#include "ctkit/classmult.hpp"
#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& kind, const std::string& message) {
  throw ParseError(kind + ": " + message);
}

Integer to_integer(long long value) {
  return Integer(static_cast<long>(value));
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> primes;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// Label suffixes run A..Z, then AA, AB, ... for pathological class counts.
std::string letter_suffix(int index) {
  std::string suffix;
  index += 1;
  while (index > 0) {
    index -= 1;
    suffix.insert(suffix.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return suffix;
}

}  // namespace

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int perm_order(const Perm& p) {
  long long order = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (size_t i = start; !seen[i]; i = p[i]) {
      seen[i] = true;
      ++length;
    }
    order = std::lcm<long long>(order, length);
  }
  return static_cast<int>(order);
}

PermGroup parse_group(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    fail("permutation group", e.what());
  }
  if (!doc.is_object()) fail("permutation group", "top level must be an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "format_version" && item.key() != "name" &&
        item.key() != "degree" && item.key() != "generators") {
      fail("permutation group", "unknown key '" + item.key() + "'");
    }
  }
  if (!doc.contains("format_version") ||
      !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<long long>() != 1) {
    fail("permutation group", "unsupported format_version");
  }
  PermGroup group;
  if (!doc.contains("name") || !doc["name"].is_string()) {
    fail("permutation group", "missing name");
  }
  group.name = doc["name"].get<std::string>();
  if (!doc.contains("degree") || !doc["degree"].is_number_integer()) {
    fail("permutation group", "missing degree");
  }
  const long long degree = doc["degree"].get<long long>();
  if (degree < 1 || degree > 1000000) {
    fail("permutation group", "degree out of range");
  }
  group.degree = static_cast<int>(degree);
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    fail("permutation group", "missing generators array");
  }
  for (size_t g = 0; g < doc["generators"].size(); ++g) {
    const json& images = doc["generators"][g];
    const std::string context = "generator " + std::to_string(g + 1);
    if (!images.is_array() ||
        static_cast<long long>(images.size()) != degree) {
      fail("permutation group",
           context + ": expected " + std::to_string(degree) + " images, got " +
               std::to_string(images.size()));
    }
    Perm perm(group.degree);
    std::vector<bool> hit(group.degree, false);
    for (size_t i = 0; i < images.size(); ++i) {
      if (!images[i].is_number_integer()) {
        fail("permutation group", context + ": images must be integers");
      }
      const long long image = images[i].get<long long>();
      if (image < 1 || image > degree || hit[image - 1]) {
        fail("permutation group",
             context + ": image list is not a permutation of 1.." +
                 std::to_string(degree));
      }
      hit[image - 1] = true;
      perm[i] = static_cast<int>(image - 1);
    }
    group.generators.push_back(std::move(perm));
  }
  return group;
}

size_t OracleClassData::PermHash::operator()(const Perm& p) const {
  size_t h = 1469598103934665603ull;
  for (int image : p) {
    h ^= static_cast<size_t>(image);
    h *= 1099511628211ull;
  }
  return h;
}

OracleClassData::OracleClassData(std::vector<Perm> elements,
                                 std::vector<OracleClass> classes,
                                 std::vector<int> class_of_element)
    : elements_(std::move(elements)),
      classes_(std::move(classes)),
      class_of_element_(std::move(class_of_element)) {
  element_index_.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) {
    element_index_.emplace(elements_[i], static_cast<int>(i));
  }
}

int OracleClassData::element_index(const Perm& p) const {
  const auto it = element_index_.find(p);
  return it == element_index_.end() ? -1 : it->second;
}

int OracleClassData::class_by_label(const std::string& label) const {
  for (int i = 0; i < num_classes(); ++i) {
    if (classes_[i].label == label) return i;
  }
  throw DataError("oracle has no class labelled '" + label + "'");
}

OracleClassData enumerate(const PermGroup& group, long long cap) {
  if (cap < 1) throw DataError("enumeration cap must be positive");

  std::unordered_map<Perm, int, OracleClassData::PermHash> index;
  std::vector<Perm> elements;
  std::deque<int> queue;
  elements.push_back(identity_perm(group.degree));
  index.emplace(elements[0], 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    for (const Perm& gen : group.generators) {
      Perm next = compose(elements[at], gen);
      if (index.find(next) != index.end()) continue;
      if (static_cast<long long>(elements.size()) >= cap) {
        throw DataError("group enumeration exceeded the cap of " +
                        std::to_string(cap) + " elements (reached " +
                        std::to_string(elements.size()) + " before stopping)");
      }
      const int id = static_cast<int>(elements.size());
      index.emplace(next, id);
      elements.push_back(std::move(next));
      queue.push_back(id);
    }
  }
  const long long order = static_cast<long long>(elements.size());

  // Conjugation orbits, walked in discovery order.
  std::vector<int> class_of(elements.size(), -1);
  std::vector<OracleClass> classes;
  for (size_t start = 0; start < elements.size(); ++start) {
    if (class_of[start] != -1) continue;
    const int class_id = static_cast<int>(classes.size());
    std::deque<int> orbit{static_cast<int>(start)};
    class_of[start] = class_id;
    std::vector<int> members{static_cast<int>(start)};
    while (!orbit.empty()) {
      const int at = orbit.front();
      orbit.pop_front();
      for (const Perm& gen : group.generators) {
        const Perm conj = compose(compose(inverse(gen), elements[at]), gen);
        const int id = index.at(conj);
        if (class_of[id] != -1) continue;
        class_of[id] = class_id;
        members.push_back(id);
        orbit.push_back(id);
      }
    }
    std::sort(members.begin(), members.end());
    OracleClass cls;
    cls.representative = elements[members.front()];
    cls.members = std::move(members);
    cls.element_order = perm_order(cls.representative);
    cls.size = static_cast<long long>(cls.members.size());
    classes.push_back(std::move(cls));
  }

  // Centralizer orders by direct counting over the whole group.
  for (OracleClass& cls : classes) {
    long long commuting = 0;
    for (const Perm& x : elements) {
      if (compose(cls.representative, x) == compose(x, cls.representative)) {
        ++commuting;
      }
    }
    cls.centralizer_order = commuting;
    if (cls.centralizer_order * cls.size != order) {
      throw ConsistencyError(
          "oracle class equation failed: centralizer " +
          std::to_string(cls.centralizer_order) + " times class size " +
          std::to_string(cls.size) + " is not the group order " +
          std::to_string(order));
    }
  }

  // Relabel into (element order, size, discovery) order.
  std::vector<int> by_label(classes.size());
  std::iota(by_label.begin(), by_label.end(), 0);
  std::stable_sort(by_label.begin(), by_label.end(), [&classes](int a, int b) {
    if (classes[a].element_order != classes[b].element_order) {
      return classes[a].element_order < classes[b].element_order;
    }
    return classes[a].size < classes[b].size;
  });
  std::vector<int> new_index(classes.size());
  for (size_t i = 0; i < by_label.size(); ++i) {
    new_index[by_label[i]] = static_cast<int>(i);
  }
  std::vector<OracleClass> ordered;
  ordered.reserve(classes.size());
  for (size_t i = 0; i < by_label.size(); ++i) {
    ordered.push_back(std::move(classes[by_label[i]]));
  }
  for (int& c : class_of) c = new_index[c];

  // Labels: per element order, letters in class order.
  int previous_order = 0;
  int letter = 0;
  for (OracleClass& cls : ordered) {
    if (cls.element_order != previous_order) {
      previous_order = cls.element_order;
      letter = 0;
    }
    cls.label = std::to_string(cls.element_order) + letter_suffix(letter++);
  }

  // Power maps for every prime dividing the group order.
  const std::vector<long long> primes = prime_factors(order);
  for (OracleClass& cls : ordered) {
    for (long long p : primes) {
      Perm power = identity_perm(group.degree);
      for (long long i = 0; i < p; ++i) power = compose(power, cls.representative);
      cls.power_maps[static_cast<int>(p)] = class_of[index.at(power)];
    }
  }

  return OracleClassData(std::move(elements), std::move(ordered),
                         std::move(class_of));
}

namespace {

long long count_pairs_with(const OracleClassData& data, int a, int b,
                           const Perm& target) {
  long long count = 0;
  for (int u_index : data.cls(a).members) {
    const Perm v = compose(inverse(data.elements()[u_index]), target);
    const int v_index = data.element_index(v);
    if (v_index >= 0 && data.class_of_element(v_index) == b) ++count;
  }
  return count;
}

}  // namespace

long long count_pairs(const OracleClassData& data, int a, int b, int c) {
  const OracleClass& target = data.cls(c);
  const long long count = count_pairs_with(data, a, b, target.representative);
  if (target.members.size() > 1) {
    const Perm& second = data.elements()[target.members[1]];
    const long long recount = count_pairs_with(data, a, b, second);
    if (recount != count) {
      throw ConsistencyError(
          "pair count for class " + target.label +
          " depends on the representative: " + std::to_string(count) +
          " vs " + std::to_string(recount));
    }
  }
  return count;
}

bool MappingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const MappingCheck& c) { return c.passed; });
}

MappingReport verify_mapping(const OracleClassData& data,
                             const CharacterTable& table,
                             const std::map<std::string, std::string>& mapping) {
  MappingReport report;
  const auto add = [&report](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed,
                             passed ? "" : std::move(detail)});
  };

  // The mapping must be a bijection between oracle labels and table names.
  {
    bool ok = data.num_classes() == table.num_classes() &&
              static_cast<int>(mapping.size()) == data.num_classes();
    std::string detail = "mapping size does not match the class counts";
    std::set<std::string> targets;
    if (ok) {
      for (const auto& [label, name] : mapping) {
        bool label_known = true;
        try {
          data.class_by_label(label);
        } catch (const DataError&) {
          label_known = false;
        }
        bool name_known = true;
        try {
          class_by_name(table, name);
        } catch (const DataError&) {
          name_known = false;
        }
        if (!label_known || !name_known || !targets.insert(name).second) {
          ok = false;
          detail = "entry " + label + " -> " + name + " is not part of a bijection";
          break;
        }
      }
    }
    add("mapping-bijection", ok, detail);
    if (!ok) return report;
  }

  add("group-order", to_integer(data.order()) == table.group_order(),
      "oracle order " + std::to_string(data.order()) + ", table order " +
          integer_str(table.group_order()));

  // Per-class invariants under the mapping.
  std::vector<int> to_table(data.num_classes());
  for (const auto& [label, name] : mapping) {
    to_table[data.class_by_label(label)] = class_by_name(table, name);
  }
  for (int i = 0; i < data.num_classes(); ++i) {
    const OracleClass& cls = data.cls(i);
    const ClassInfo& info = table.class_info(to_table[i]);
    const std::string name = "class-match " + cls.label + " -> " + info.name;
    if (cls.element_order != info.element_order) {
      add(name, false,
          "element order " + std::to_string(cls.element_order) + " vs " +
              std::to_string(info.element_order));
      continue;
    }
    if (to_integer(cls.centralizer_order) != info.centralizer_order) {
      add(name, false,
          "centralizer order " + std::to_string(cls.centralizer_order) +
              " vs " + integer_str(info.centralizer_order));
      continue;
    }
    if (to_integer(cls.size) != table.class_size(to_table[i])) {
      add(name, false,
          "class size " + std::to_string(cls.size) + " vs " +
              integer_str(table.class_size(to_table[i])));
      continue;
    }
    bool maps_ok = true;
    std::string detail;
    for (const auto& [prime, oracle_target] : cls.power_maps) {
      const auto it = info.power_maps.find(prime);
      if (it == info.power_maps.end()) {
        maps_ok = false;
        detail = "table stores no power map for prime " + std::to_string(prime);
        break;
      }
      if (it->second != to_table[oracle_target]) {
        maps_ok = false;
        detail = "power map for prime " + std::to_string(prime) +
                 " disagrees: oracle lands in " +
                 data.cls(oracle_target).label + ", table in " +
                 table.class_info(it->second).name;
        break;
      }
    }
    add(name, maps_ok, detail);
  }

  // The decisive check: the character-table formula against direct counting
  // on every triple.
  {
    bool ok = true;
    std::string detail;
    long long checked = 0;
    for (int a = 0; a < data.num_classes() && ok; ++a) {
      for (int b = 0; b < data.num_classes() && ok; ++b) {
        for (int c = 0; c < data.num_classes() && ok; ++c) {
          const long long counted = count_pairs(data, a, b, c);
          Integer computed;
          try {
            computed =
                mult_coefficient(table, to_table[a], to_table[b], to_table[c])
                    .value;
          } catch (const Error& e) {
            ok = false;
            detail = e.what();
            break;
          }
          if (computed != to_integer(counted)) {
            ok = false;
            detail = "triple (" + data.cls(a).label + "," + data.cls(b).label +
                     "," + data.cls(c).label + "): oracle " +
                     std::to_string(counted) + ", formula " +
                     integer_str(computed);
          }
          ++checked;
        }
      }
    }
    add("triple-sweep", ok,
        ok ? std::to_string(checked) + " triples" : detail);
  }

  return report;
}

Fixture parse_fixture(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    fail("fixture", e.what());
  }
  if (!doc.is_object()) fail("fixture", "top level must be an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "format_version" && item.key() != "group" &&
        item.key() != "table" && item.key() != "mapping") {
      fail("fixture", "unknown key '" + item.key() + "'");
    }
  }
  if (!doc.contains("format_version") ||
      !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<long long>() != 1) {
    fail("fixture", "unsupported format_version");
  }
  Fixture fixture;
  if (!doc.contains("group") || !doc["group"].is_string()) {
    fail("fixture", "missing group path");
  }
  fixture.group_path = doc["group"].get<std::string>();
  if (!doc.contains("table") || !doc["table"].is_string()) {
    fail("fixture", "missing table path");
  }
  fixture.table_path = doc["table"].get<std::string>();
  if (!doc.contains("mapping") || !doc["mapping"].is_object()) {
    fail("fixture", "missing mapping object");
  }
  for (const auto& item : doc["mapping"].items()) {
    if (!item.value().is_string()) {
      fail("fixture", "mapping values must be class names");
    }
    fixture.mapping[item.key()] = item.value().get<std::string>();
  }
  return fixture;
}

}  // namespace ctkit
