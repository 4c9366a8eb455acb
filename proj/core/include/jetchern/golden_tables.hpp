#pragma once

#include <jetchern/chern_ring.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jetchern {

// One published table row (or totals line), cell for cell as printed.  These
// values are never used in computations -- they exist only so verify-paper can
// diff them against the recomputation.  Known misprints are kept as printed.
struct GoldenRow {
  WeightedPartition I;  // empty for the totals line
  std::optional<Int> rank;
  std::optional<Rat> c1;
  std::optional<Rat> c2_a, c2_b;        // c2 = c2_a*c1^2 + c2_b*c2
  std::optional<Rat> delta_a, delta_b;  // Delta = delta_a*c1^2 + delta_b*c2
  std::optional<Rat> mu;
};

struct GoldenTable {
  std::string name;  // published label, e.g. "I_24"
  unsigned k = 0, m = 0;
  std::vector<GoldenRow> rows;
  GoldenRow totals;
  std::vector<std::string> notes;  // display anomalies that are not value cells
};

const std::vector<GoldenTable>& golden_tables();
const GoldenTable* find_golden_table(unsigned k, unsigned m);

// Published irreducible-dimension tables d_lambda for m = 3..7, as printed.
struct GoldenDimRow {
  Partition lambda;
  unsigned rho = 0;
  Int d;  // printed dimension
};

const std::vector<std::pair<unsigned, std::vector<GoldenDimRow>>>& golden_dim_tables();

}  // namespace jetchern
