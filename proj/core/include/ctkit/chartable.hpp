#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctkit/cyclotomic.hpp"
#include "ctkit/rational.hpp"

namespace ctkit {

struct ClassInfo {
  std::string name;
  int element_order = 1;
  Integer centralizer_order;
  // prime -> class index of the p-th power; stored only for primes dividing
  // the group order. Composite powers are always derived, never stored.
  std::map<int, int> power_maps;
};

bool operator==(const ClassInfo& a, const ClassInfo& b);

// Immutable character table: class data plus the square matrix of
// irreducible character values, rows indexed by character, columns aligned
// with classes. Class index 0 is the identity class. Construction checks
// structural invariants only (shape, ranges, name uniqueness); mathematical
// consistency is the validator's job.
class CharacterTable {
 public:
  CharacterTable(std::string name, Integer group_order,
                 std::vector<ClassInfo> classes,
                 std::vector<std::vector<Cyclotomic>> irreducibles,
                 std::optional<std::vector<std::string>> socle_annotation =
                     std::nullopt);

  const std::string& name() const { return name_; }
  const Integer& group_order() const { return group_order_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const ClassInfo& class_info(int index) const;
  const std::vector<ClassInfo>& classes() const { return classes_; }
  int num_characters() const { return static_cast<int>(irreducibles_.size()); }
  const Cyclotomic& value(int character, int class_index) const;
  const std::vector<std::vector<Cyclotomic>>& irreducibles() const {
    return irreducibles_;
  }
  Integer class_size(int index) const;
  const std::optional<std::vector<std::string>>& socle_annotation() const {
    return socle_annotation_;
  }

 private:
  std::string name_;
  Integer group_order_;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<Cyclotomic>> irreducibles_;
  std::optional<std::vector<std::string>> socle_annotation_;
};

bool operator==(const CharacterTable& a, const CharacterTable& b);

// Reads the character-table file format (see docs/formats.md). Structural
// errors (syntax, shape, ranges, non-canonical number strings) throw
// ParseError; mathematical invariants are deferred to validate().
CharacterTable parse_table(const std::string& text);

// Canonical serialization; parse_table(serialize_table(t)) == t.
std::string serialize_table(const CharacterTable& table);

inline constexpr const char* kCheckTrivialCharacter = "trivial-character";
inline constexpr const char* kCheckCentralizerSum = "centralizer-sum";
inline constexpr const char* kCheckDegreeSquareSum = "degree-square-sum";
inline constexpr const char* kCheckFirstOrthogonality = "first-orthogonality";
inline constexpr const char* kCheckSecondOrthogonality = "second-orthogonality";
inline constexpr const char* kCheckPowerMapConsistency = "power-map-consistency";
inline constexpr const char* kCheckSocleAnnotation = "socle-annotation";

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on pass
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool valid() const;
  const ValidationCheck* find(const std::string& name) const;
};

// Exact recomputation of the table identities: trivial character at row 0,
// centralizer sum, squared-degree sum, both orthogonality relations, power
// map order consistency, and the socle annotation cross-check when the file
// carries one. Failures are report entries, never exceptions.
ValidationReport validate(const CharacterTable& table);

// Index of the unique class with the given name; DataError if unknown.
int class_by_name(const CharacterTable& table, const std::string& name);

// Class of g^k for g in the given class: k is reduced modulo the element
// order, then the stored prime power maps are composed along the prime
// factorization of the reduced exponent. k = 0 yields the identity class.
// DataError when a required prime map is not stored.
int power_class(const CharacterTable& table, int class_index, long long k);

// The unique class c* with chi(c*) = conjugate(chi(c)) for every
// irreducible chi; ConsistencyError if no or several classes match.
int inverse_class(const CharacterTable& table, int class_index);

// For tables with exactly two linear characters (the structure forced by a
// subgroup of index 2): the classes on which the nontrivial linear
// character takes value 1, i.e. the classes inside the index-2 subgroup.
// DataError when the linear-character count is not 2.
std::set<int> socle_classes(const CharacterTable& table);

// Classes of odd element order >= 3, in table order.
std::vector<int> odd_order_nonidentity_classes(const CharacterTable& table);

}  // namespace ctkit
