#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctkit/chartable.hpp"

namespace ctkit {

// A permutation of {0..degree-1} as its image list. Composition is
// left-to-right throughout the repository: (p * q) applies p first, then q,
// i.e. compose(p, q)[i] = q[p[i]].
using Perm = std::vector<int>;

Perm identity_perm(int degree);
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
int perm_order(const Perm& p);

struct PermGroup {
  std::string name;
  int degree = 1;
  std::vector<Perm> generators;
};

// Reads the permutation-group file format (see docs/formats.md); image
// lists are 1-based in the file, 0-based in memory.
PermGroup parse_group(const std::string& text);

struct OracleClass {
  std::string label;  // ATLAS-style: element order plus a letter
  Perm representative;
  std::vector<int> members;  // indices into elements, ascending
  int element_order = 1;
  long long size = 0;
  long long centralizer_order = 0;
  std::map<int, int> power_maps;  // prime -> class index
};

// Ground-truth class data from exhaustive enumeration. Classes are ordered
// by (element order, class size, discovery), which also fixes the labels:
// 1A, 2A, 2B, ... Everything is deterministic in the input file.
class OracleClassData {
 public:
  struct PermHash {
    size_t operator()(const Perm& p) const;
  };

  OracleClassData(std::vector<Perm> elements, std::vector<OracleClass> classes,
                  std::vector<int> class_of_element);

  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const OracleClass& cls(int index) const { return classes_[index]; }
  const std::vector<OracleClass>& classes() const { return classes_; }

  // Index of an element, or -1 when the permutation is not in the group.
  int element_index(const Perm& p) const;
  int class_of_element(int element_index) const {
    return class_of_element_[element_index];
  }
  int class_by_label(const std::string& label) const;  // DataError if unknown

 private:
  std::vector<Perm> elements_;
  std::vector<OracleClass> classes_;
  std::vector<int> class_of_element_;
  std::unordered_map<Perm, int, PermHash> element_index_;
};

inline constexpr long long kDefaultEnumerationCap = 100000;

// Closure of the generators under multiplication, conjugacy classes as
// conjugation orbits, centralizer orders by direct counting, power maps by
// powering representatives. DataError when the group exceeds the cap.
OracleClassData enumerate(const PermGroup& group,
                          long long cap = kDefaultEnumerationCap);

// The number of pairs (u,v), u in class a, v in class b, with u*v equal to
// the stored representative of class c, by exhaustive counting. The count
// is re-checked against a second representative when one exists.
long long count_pairs(const OracleClassData& data, int a, int b, int c);

struct MappingCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct MappingReport {
  std::vector<MappingCheck> checks;
  bool passed() const;
};

// Binds oracle classes to table classes via an explicit label -> name
// bijection and verifies: element orders, class sizes, centralizer orders,
// all prime power maps, and count_pairs == mult_coefficient over every
// triple. Failures are report entries, not exceptions.
MappingReport verify_mapping(const OracleClassData& data,
                             const CharacterTable& table,
                             const std::map<std::string, std::string>& mapping);

struct Fixture {
  std::string group_path;
  std::string table_path;
  std::map<std::string, std::string> mapping;
};

// Reads the fixture file binding a group file, a table file, and a class
// mapping. Paths are interpreted relative to the fixture file's directory.
Fixture parse_fixture(const std::string& text);

}  // namespace ctkit
