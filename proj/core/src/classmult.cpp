#include "ctkit/classmult.hpp"

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

std::string triple_str(const CharacterTable& table, int a, int b, int c) {
  return "m(" + table.class_info(a).name + "," + table.class_info(b).name +
         "," + table.class_info(c).name + ") of table " + table.name();
}

// chi(1) as a positive integer; anything else is a broken table.
Rational character_degree(const CharacterTable& table, int row) {
  const auto degree = try_rational(table.value(row, 0));
  if (!degree || !degree->is_integer() || degree->sign() <= 0) {
    throw ConsistencyError("table " + table.name() + ": character " +
                           std::to_string(row) +
                           " has a degree that is not a positive integer");
  }
  return *degree;
}

// Scales the character sum by |G| / (|C(a)| |C(b)|) and enforces the
// integrality contract.
Integer finish(const CharacterTable& table, int a, int b, int c,
               const Cyclotomic& sum) {
  const auto rational_sum = try_rational(sum);
  if (!rational_sum) {
    throw ConsistencyError(triple_str(table, a, b, c) +
                           ": character sum is not rational: " + sum.str());
  }
  const Rational prefactor(table.group_order(),
                           table.class_info(a).centralizer_order *
                               table.class_info(b).centralizer_order);
  const Rational value = prefactor * *rational_sum;
  if (!value.is_integer() || value.sign() < 0) {
    throw ConsistencyError(triple_str(table, a, b, c) +
                           " is not a nonnegative integer: " + value.str());
  }
  return value.numerator();
}

}  // namespace

MultCoefficient mult_coefficient(const CharacterTable& table, int a, int b,
                                 int c) {
  Cyclotomic sum;
  for (int row = 0; row < table.num_characters(); ++row) {
    const Rational degree = character_degree(table, row);
    const Cyclotomic product =
        table.value(row, a) * table.value(row, b) * conjugate(table.value(row, c));
    sum = sum + product * Cyclotomic(Rational(1) / degree);
  }
  return MultCoefficient{finish(table, a, b, c, sum), a, b, c, table.name()};
}

std::vector<MultCoefficient> mult_row(const CharacterTable& table, int a,
                                      int b) {
  const int count = table.num_classes();
  // chi(a) chi(b) / chi(1) is shared across the whole row of c values.
  std::vector<Cyclotomic> partial;
  partial.reserve(table.num_characters());
  for (int row = 0; row < table.num_characters(); ++row) {
    const Rational degree = character_degree(table, row);
    partial.push_back(table.value(row, a) * table.value(row, b) *
                      Cyclotomic(Rational(1) / degree));
  }
  std::vector<MultCoefficient> result;
  result.reserve(count);
  for (int c = 0; c < count; ++c) {
    Cyclotomic sum;
    for (int row = 0; row < table.num_characters(); ++row) {
      sum = sum + partial[row] * conjugate(table.value(row, c));
    }
    result.push_back(
        MultCoefficient{finish(table, a, b, c, sum), a, b, c, table.name()});
  }
  Integer weighted = 0;
  for (int c = 0; c < count; ++c) {
    weighted += table.class_size(c) * result[c].value;
  }
  const Integer expected = table.class_size(a) * table.class_size(b);
  if (weighted != expected) {
    throw ConsistencyError(
        "counting identity failed for row (" + table.class_info(a).name + "," +
        table.class_info(b).name + ") of table " + table.name() +
        ": weighted sum " + integer_str(weighted) + ", expected " +
        integer_str(expected));
  }
  return result;
}

}  // namespace ctkit
