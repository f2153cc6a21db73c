#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "ctkit/brute_oracle.hpp"
#include "ctkit/classmult.hpp"

using namespace ctkit;

namespace {

std::string read_data_file(const std::string& relative) {
  std::ifstream in(std::string(CTKIT_DATA_ROOT) + "/" + relative,
                   std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const CharacterTable& s5_table() {
  static const CharacterTable table =
      parse_table(read_data_file("tables/s5.json"));
  return table;
}

void BM_MultCoefficient(benchmark::State& state) {
  const CharacterTable& table = s5_table();
  const int a = class_by_name(table, "2A");
  const int c = class_by_name(table, "3A");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mult_coefficient(table, a, a, c));
  }
}
BENCHMARK(BM_MultCoefficient);

void BM_MultRow(benchmark::State& state) {
  const CharacterTable& table = s5_table();
  const int a = class_by_name(table, "2A");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mult_row(table, a, a));
  }
}
BENCHMARK(BM_MultRow);

void BM_ValidateTable(benchmark::State& state) {
  const CharacterTable& table = s5_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(table));
  }
}
BENCHMARK(BM_ValidateTable);

void BM_ParseTable(benchmark::State& state) {
  const std::string text = read_data_file("tables/s5.json");
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_table(text));
  }
}
BENCHMARK(BM_ParseTable);

void BM_EnumerateS5(benchmark::State& state) {
  const PermGroup group = parse_group(read_data_file("groups/s5.json"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(group));
  }
}
BENCHMARK(BM_EnumerateS5);

void BM_OracleTripleSweep(benchmark::State& state) {
  const OracleClassData data =
      enumerate(parse_group(read_data_file("groups/s4.json")));
  for (auto _ : state) {
    long long total = 0;
    for (int a = 0; a < data.num_classes(); ++a) {
      for (int b = 0; b < data.num_classes(); ++b) {
        for (int c = 0; c < data.num_classes(); ++c) {
          total += count_pairs(data, a, b, c);
        }
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_OracleTripleSweep);

}  // namespace
