#pragma once

#include <string>
#include <vector>

#include "ctkit/chartable.hpp"

namespace ctkit {

// m(a,b,c): the number of pairs (u,v) with u in class a, v in class b and
// uv equal to a fixed representative of class c.
struct MultCoefficient {
  Integer value;
  int a = 0;
  int b = 0;
  int c = 0;
  std::string table_name;
};

// Exact evaluation of
//   m(a,b,c) = |G| / (|C(a)| |C(b)|) * sum_chi chi(a) chi(b) conj(chi(c)) / chi(1).
// The character sum is accumulated in exact cyclotomic arithmetic and must
// reduce to a rational; the final value must be a nonnegative integer.
// Anything else signals an inconsistent table and throws ConsistencyError
// naming the offending triple. The table is assumed validated.
MultCoefficient mult_coefficient(const CharacterTable& table, int a, int b,
                                 int c);

// One coefficient per class c, plus the counting identity
//   sum_c |class c| * m(a,b,c) = |class a| * |class b|,
// whose failure also throws ConsistencyError.
std::vector<MultCoefficient> mult_row(const CharacterTable& table, int a,
                                      int b);

}  // namespace ctkit
