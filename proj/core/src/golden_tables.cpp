#include <jetchern/golden_tables.hpp>

namespace jetchern {

namespace {

GoldenRow row(std::vector<unsigned> I, long rank, long c1, long c2a, long c2b,
              long da, long db, long mun, long mud = 1) {
  GoldenRow r;
  r.I = WeightedPartition{std::move(I)};
  r.rank = Int(rank);
  r.c1 = Rat(c1);
  r.c2_a = Rat(c2a);
  r.c2_b = Rat(c2b);
  r.delta_a = Rat(da);
  r.delta_b = Rat(db);
  r.mu = Rat(mun, mud);
  return r;
}

// tables print totals for c1, c2, Delta and mu but not for rank
GoldenRow totals(long c1, long c2a, long c2b, long da, long db, long mun, long mud = 1) {
  GoldenRow r;
  r.c1 = Rat(c1);
  r.c2_a = Rat(c2a);
  r.c2_b = Rat(c2b);
  r.delta_a = Rat(da);
  r.delta_b = Rat(db);
  r.mu = Rat(mun, mud);
  return r;
}

std::vector<GoldenTable> build_tables() {
  std::vector<GoldenTable> t;

  t.push_back({"I_22", 2, 2,
               {row({2, 0}, 3, 3, 2, 4, 7, -4, 1),
                row({0, 1}, 2, 1, 0, 1, 1, -4, 1, 2)},
               totals(4, 5, 5, 11, -5, 4, 5),
               {"row (0,1): Delta printed as c1^2 - 4 c2"}});

  t.push_back({"I_23", 2, 3,
               {row({3, 0}, 4, 6, 11, 10, 25, -10, 3, 2),
                row({1, 1}, 4, 4, 6, 4, 10, -4, 1)},
               totals(10, 41, 14, 59, -14, 5, 4),
               {}});

  t.push_back({"I_24", 2, 4,
               {row({4, 0}, 5, 10, 35, 20, 65, -20, 2),
                row({2, 1}, 6, 9, 34, 11, 57, -11, 3, 2),
                row({0, 2}, 3, 3, 2, 4, 7, -4, 1)},
               totals(22, 203, 35, 281, -35, 11, 7),
               {}});

  t.push_back({"I_25", 2, 5,
               {row({5, 0}, 6, 15, 85, 35, 120, -35, 5, 2),
                row({3, 1}, 8, 16, 112, 24, 144, -24, 2),
                row({1, 2}, 6, 9, 34, 11, 47, -11, 3, 2)},
               totals(40, 750, 70, 850, -70, 2),
               {}});

  t.push_back({"I_26", 2, 6,
               {row({6, 0}, 7, 21, 175, 56, 226, -56, 3),
                row({4, 1}, 10, 25, 330, 45, 295, -45, 5, 2),
                row({2, 2}, 9, 18, 147, 24, 177, -24, 2),
                row({0, 3}, 4, 6, 11, 10, 25, -10, 3, 2)},
               totals(70, 662, 135, 4238, -135, 7, 3),
               {}});

  t.push_back({"II_36", 3, 6,
               {row({6, 0, 0}, 7, 21, 175, 56, 260, -56, 3),
                row({4, 1, 0}, 10, 25, 330, 45, 295, -45, 5, 2),
                row({3, 0, 1}, 8, 16, 112, 24, 144, -24, 2),
                row({2, 2, 0}, 9, 18, 147, 24, 177, -24, 2),
                row({1, 1, 1}, 8, 12, 66, 12, 78, -12, 3, 2),
                row({0, 3, 0}, 4, 6, 11, 10, 25, -10, 3, 2),
                row({0, 0, 2}, 3, 3, 2, 4, 7, -4, 1)},
               totals(101, 5026, 175, 5175, -175, 101, 49),
               {}});

  t.push_back({"III_33", 3, 3,
               {row({3, 0, 0}, 4, 6, 11, 10, 25, -10, 3, 2),
                row({1, 1, 0}, 4, 4, 6, 4, 10, -4, 1),
                row({0, 0, 1}, 2, 1, 0, 1, 1, -1, 1)},
               totals(11, 51, 15, 70, -15, 11, 10),
               {"totals c1 printed with a stray square: 11 c_1^2"}});

  t.push_back({"III_44", 4, 4,
               {row({4, 0, 0, 0}, 5, 10, 35, 20, 65, -20, 2),
                row({2, 1, 0, 0}, 6, 9, 34, 11, 47, -11, 3, 2),
                row({1, 0, 1, 0}, 4, 4, 6, 4, 10, -4, 1),
                row({0, 2, 0, 0}, 3, 3, 2, 4, 7, -4, 1),
                row({0, 0, 0, 1}, 2, 1, 0, 1, 1, -1, 1, 2)},
               totals(27, 338, 40, 391, -40, 27, 20),
               {}});

  t.push_back({"III_55", 5, 5,
               {row({5, 0, 0, 0, 0}, 6, 15, 85, 35, 140, -35, 5, 2),
                row({3, 1, 0, 0, 0}, 8, 16, 112, 24, 144, -24, 2),
                row({2, 0, 1, 0, 0}, 6, 9, 34, 11, 47, -11, 3, 2),
                row({1, 2, 0, 0, 0}, 6, 9, 34, 11, 47, -11, 3, 2),
                row({1, 0, 0, 1, 0}, 4, 4, 6, 4, 10, -4, 1),
                row({0, 1, 1, 0, 0}, 4, 4, 6, 4, 10, -4, 1),
                row({0, 0, 0, 0, 1}, 2, 1, 0, 1, 1, -1, 1)},
               totals(58, 1622, 90, 1742, -90, 29, 18),
               {"preamble lists the factor list with a garbled entry and a duplicate; "
                "rows are aligned here by partition",
                "totals Delta labelled with the order-4 bundle"}});

  return t;
}

GoldenDimRow dim_row(std::vector<unsigned> lambda, unsigned rho, long d) {
  return GoldenDimRow{Partition{std::move(lambda)}, rho, Int(d)};
}

std::vector<std::pair<unsigned, std::vector<GoldenDimRow>>> build_dim_tables() {
  std::vector<std::pair<unsigned, std::vector<GoldenDimRow>>> t;
  t.push_back({3, {dim_row({1, 1, 1}, 3, 1), dim_row({2, 1}, 2, 2), dim_row({3}, 1, 1)}});
  t.push_back({4,
               {dim_row({1, 1, 1, 1}, 4, 1), dim_row({2, 1, 1}, 3, 3), dim_row({3, 1}, 2, 3),
                dim_row({2, 2}, 2, 2), dim_row({4}, 1, 1)}});
  t.push_back({5,
               {dim_row({1, 1, 1, 1, 1}, 5, 1), dim_row({2, 1, 1, 1}, 4, 4),
                dim_row({3, 1, 1}, 3, 6), dim_row({2, 2, 1}, 3, 5), dim_row({4, 1}, 2, 4),
                dim_row({3, 2}, 2, 15),  // printed 15; recomputation gives 5
                dim_row({5}, 1, 1)}});
  t.push_back({6,
               {dim_row({1, 1, 1, 1, 1, 1}, 6, 1), dim_row({2, 1, 1, 1, 1}, 5, 5),
                dim_row({3, 1, 1, 1}, 4, 10), dim_row({2, 2, 1, 1}, 4, 9),
                dim_row({4, 1, 1}, 3, 10),
                dim_row({3, 2, 1}, 3, 36),  // printed 36; recomputation gives 16
                dim_row({2, 2, 2}, 3, 5),
                dim_row({5, 1}, 2, 30),  // printed 30; recomputation gives 5
                dim_row({4, 2}, 2, 9), dim_row({3, 3}, 2, 5), dim_row({6}, 1, 1)}});
  t.push_back({7,
               {dim_row({1, 1, 1, 1, 1, 1, 1}, 7, 1), dim_row({2, 1, 1, 1, 1, 1}, 6, 6),
                dim_row({3, 1, 1, 1, 1}, 5, 15), dim_row({2, 2, 1, 1, 1}, 5, 14),
                dim_row({4, 1, 1, 1}, 4, 20), dim_row({3, 2, 1, 1}, 4, 35),
                dim_row({2, 2, 2, 1}, 4, 14), dim_row({5, 1, 1}, 3, 15),
                dim_row({4, 2, 1}, 3, 35), dim_row({3, 3, 1}, 3, 21),
                dim_row({3, 2, 2}, 3, 21), dim_row({6, 1}, 2, 6), dim_row({5, 2}, 2, 14),
                dim_row({4, 3}, 2, 14), dim_row({7}, 1, 1)}});
  return t;
}

}  // namespace

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = build_tables();
  return tables;
}

const GoldenTable* find_golden_table(unsigned k, unsigned m) {
  for (const auto& t : golden_tables())
    if (t.k == k && t.m == m) return &t;
  return nullptr;
}

const std::vector<std::pair<unsigned, std::vector<GoldenDimRow>>>& golden_dim_tables() {
  static const std::vector<std::pair<unsigned, std::vector<GoldenDimRow>>> tables =
      build_dim_tables();
  return tables;
}

}  // namespace jetchern
