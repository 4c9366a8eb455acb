#pragma once

#include <jetchern/chern_ring.hpp>
#include <jetchern/golden_tables.hpp>

#include <string>
#include <vector>

namespace jetchern {

// One graded factor S_I of Gr J_k^m with its derived quantities.
struct JetRow {
  WeightedPartition I;
  SurfaceChern ch;
  Rat delta_a, delta_b;  // Delta(S_I) = c1^2(S_I) - c2(S_I), on the (c1^2, c2) basis
  Rat mu;                // c1 multiplier / rank
};

struct JetSheafReport {
  unsigned k = 0, m = 0;
  std::vector<JetRow> rows;
  SurfaceChern total;    // Whitney sum over all factors
  Rat delta_a, delta_b;  // Delta(J_k^m) = c1^2 - c2 of the total
  Rat mu_total;
};

// Graded factors of the weight-m piece of the order-k jet-differential
// bundle on a surface: one S_I per weighted partition, in descending
// lexicographic order (the order the published tables use).
std::vector<std::pair<WeightedPartition, SurfaceChern>> gg_factors(unsigned k, unsigned m);

JetSheafReport jet_chern_surface(unsigned k, unsigned m);

// On a curve everything collapses: rank = q_k(m), c1 = L_k(m) * K_X.
CurveChern jet_chern_curve(unsigned k, unsigned m);

// Rendering helpers shared with the front end.
std::string partition_label(const WeightedPartition& I);  // "(2,1)"
std::string class_string(const Rat& a, const Rat& b);     // "34c1^2+11c2"

// One audited cell: the printed value against the recomputed one.
struct CellComparison {
  std::string table;   // e.g. "I_24" or "dim m=6"
  std::string cell;    // e.g. "(2,1) c2" or "totals Delta"
  std::string paper;   // as printed
  std::string oracle;  // as recomputed
  bool match = false;
};

struct ErratumReport {
  std::vector<CellComparison> cells;
  std::vector<std::string> notes;  // display anomalies that are not value cells
  int matches() const;
  int mismatches() const;
};

// Recompute every golden table (the nine jet tables and the five
// irreducible-dimension tables) and diff cell by cell.  Reports; never
// asserts that the published values are correct.
ErratumReport verify_tables();

}  // namespace jetchern
