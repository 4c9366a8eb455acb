// Acceptance gate: one numbered check per release criterion.
//
//   acceptance        runs all ten and prints a summary
//   acceptance N      runs criterion N alone; exit 0 iff it passes
//
// Two criteria (4 and 8) assert published table values that the exact
// recomputation contradicts.  They are kept exactly as stated and fail,
// printing both values cell by cell together with the independent
// cross-checks that localize the discrepancy.  Nothing here ever assumes a
// published number is the correct one.

#include <jetchern/chern_ring.hpp>
#include <jetchern/combinatorics.hpp>
#include <jetchern/jet_calculus.hpp>
#include <jetchern/jet_sheaf.hpp>
#include <jetchern/positivity.hpp>
#include <jetchern/wps.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace jetchern;

namespace {

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

struct Checker {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> lines;

  void note(const std::string& s) { lines.push_back(s); }

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ++failures;
      lines.push_back("FAILED " + what);
    }
  }

  template <typename A, typename B>
  void eq(const A& got, const B& want, const std::string& what) {
    ++checks;
    if (got == want) return;
    ++failures;
    lines.push_back("FAILED " + what + ": computed " + str(got) + ", stated " + str(want));
  }
};

std::string tuple_str(const WeightTuple& q) {
  std::string s = "(";
  for (size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + q[i].str();
  return s + ")";
}

WeightTuple wt(std::initializer_list<long> v) {
  WeightTuple q;
  for (long x : v) q.push_back(Int(x));
  return q;
}

void chern_eq(Checker& c, const SurfaceChern& got, const SurfaceChern& want,
              const std::string& what) {
  c.eq(got.rank, want.rank, what + " rank");
  c.eq(got.a1, want.a1, what + " c1");
  c.eq(got.a2, want.a2, what + " c2 (c1^2 part)");
  c.eq(got.b2, want.b2, what + " c2 (c2 part)");
}

// ---------------------------------------------------------------- criterion 1

void crit1(Checker& c) {
  const long p[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101};
  for (unsigned m = 1; m <= 13; ++m)
    c.eq(p_total(m), Int(p[m - 1]), "p(" + str(m) + ")");

  const long L[] = {35, 54, 86, 128, 192, 275, 399, 556, 780, 1068, 1463};
  for (unsigned m = 6; m <= 16; ++m)
    c.eq(total_length(m, m), Int(L[m - 6]), "L(" + str(m) + ")");

  const long row6[] = {1, 3, 3, 2, 1, 1};
  const long row7[] = {1, 3, 4, 3, 2, 1, 1};
  for (unsigned k = 1; k <= 6; ++k)
    c.eq(p_exact_parts(6, k), Int(row6[k - 1]), "p_" + str(k) + "(6)");
  for (unsigned k = 1; k <= 7; ++k)
    c.eq(p_exact_parts(7, k), Int(row7[k - 1]), "p_" + str(k) + "(7)");

  c.note("p(13) = 101, L(16) = 1463, and both published p_k rows reproduce exactly");
}

// ---------------------------------------------------------------- criterion 2

void crit2(Checker& c) {
  const long kappa[] = {6, 12, 20, 35, 54};
  const long rank[] = {3, 5, 7, 11, 15};
  for (unsigned k = 3; k <= 7; ++k) {
    const CurveChern cc = jet_chern_curve(k, k);
    c.eq(cc.kappa, Rat(kappa[k - 3]), "curve c1 coefficient at k = " + str(k));
    c.eq(cc.rank, Int(rank[k - 3]), "curve rank at k = " + str(k));
  }
  c.note("c1 coefficients 6, 12, 20, 35, 54 for k = 3..7, ranks 3, 5, 7, 11, 15");
}

// ---------------------------------------------------------------- criterion 3

void crit3(Checker& c) {
  for (unsigned m = 1; m <= 30; ++m)
    chern_eq(c, sym_power_surface(m), oracle_from_roots(sym_roots(m)),
             "Sym^" + str(m) + " closed form vs roots");

  int factors = 0;
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned k = 1; k <= 4; ++k)
      for (const WeightedPartition& I : enumerate_weighted(m, k)) {
        chern_eq(c, factor_bundle(I), oracle_from_roots(factor_roots(I)),
                 "factor " + partition_label(I) + " (m=" + str(m) + ",k=" + str(k) + ")");
        ++factors;
      }
  c.note("30 symmetric powers and " + str(factors) +
         " composition factors agree with the root oracle in every field");
}

// ---------------------------------------------------------------- criterion 4

void crit4(Checker& c) {
  const ErratumReport rep = verify_tables();
  int seen = 0;
  for (const CellComparison& cell : rep.cells) {
    if (cell.table != "I_22" && cell.table != "I_23") continue;
    ++seen;
    c.expect(cell.match, cell.table + " " + cell.cell + ": published " + cell.paper +
                             ", recomputed " + cell.oracle);
  }
  c.note(str(seen) + " cells scanned across I_22 and I_23; the criterion requires " +
         "every one of them to match the oracle");

  if (c.failures == 0) return;
  c.note("independent cross-checks localizing the disagreements:");

  // The (1,1) row of I_23 is the tensor square of the cotangent bundle.  Three
  // routes agree on its c2 and all disagree with the printed cell.
  const SurfaceChern ct = sym_power_surface(1);
  const SurfaceChern byproduct = tensor_ch(ct, ct);
  const SurfaceChern byroots = oracle_from_roots(tensor_roots(sym_roots(1), sym_roots(1)));
  const SurfaceChern canonical{1, 1, 0, 0};  // det T*X as a line bundle
  const SurfaceChern bywhitney = whitney(sym_power_surface(2), canonical);
  c.note("  (1,1) c2 via Chern-character product:  " + class_string(byproduct.a2, byproduct.b2));
  c.note("  (1,1) c2 via root expansion:           " + class_string(byroots.a2, byroots.b2));
  c.note("  (1,1) c2 via Sym^2 (+) det splitting:  " + class_string(bywhitney.a2, bywhitney.b2));
  c.note("  on the projective plane (c1^2 = 9, c2 = 3) the recomputed cell evaluates to " +
         str(byproduct.a2 * 9 + byproduct.b2 * 3) + "; the printed 6c1^2+4c2 would give 66");

  // The printed I_23 total folds the printed rows, slipped cell included: the
  // error lives in the (1,1) row and propagates to the total.
  c.note("  folding the printed rows (11c1^2+10c2, 6c1^2+4c2, cross term 6*4*c1^2) " +
         std::string("reproduces the printed total 41c1^2+14c2; the oracle fold gives 40c1^2+14c2"));

  // The I_22 (0,1) Delta cell contradicts the same row's printed c2 cell.
  const SurfaceChern row01 = factor_bundle(WeightedPartition{{0, 1}});
  c.note("  I_22 (0,1) Delta from that row's own printed c2 cell (0c1^2+1c2): " +
         class_string(row01.a1 * row01.a1 - row01.a2, -row01.b2) +
         "; the printed Delta 1c1^2-4c2 is inconsistent with its own row");
  c.note("criterion kept as stated; it fails because the published cells above cannot be " +
         std::string("reproduced by any of the independent routes"));
}

// ---------------------------------------------------------------- criterion 5

void crit5(Checker& c) {
  const ErratumReport rep = verify_tables();
  auto cell = [&rep](const std::string& table, const std::string& name) -> const CellComparison* {
    for (const CellComparison& x : rep.cells)
      if (x.table == table && x.cell == name) return &x;
    return nullptr;
  };

  const CellComparison* c24 = cell("I_24", "(2,1) c2");
  c.expect(c24 != nullptr, "I_24 (2,1) c2 cell present");
  if (c24) {
    c.expect(!c24->match, "I_24 (2,1) c2 flagged MISMATCH");
    c.eq(c24->paper, std::string("34c1^2+11c2"), "I_24 (2,1) published value");
    c.eq(c24->oracle, std::string("31c1^2+11c2"), "I_24 (2,1) recomputed value");
  }

  const CellComparison* c25 = cell("I_25", "(1,2) c2");
  c.expect(c25 != nullptr, "I_25 (1,2) c2 cell present");
  if (c25) {
    c.expect(!c25->match, "I_25 (1,2) c2 flagged MISMATCH");
    c.eq(c25->paper, std::string("34c1^2+11c2"), "I_25 (1,2) published value");
    c.eq(c25->oracle, std::string("31c1^2+11c2"), "I_25 (1,2) recomputed value");
  }
  c.note("the (2,1) composite factor is a printed row of I_24 and I_25; the seven rows of " +
         std::string("II_36 are three-slot products and do not include it"));

  const CellComparison* d6 = cell("dim m=6", "(3,2,1) d");
  c.expect(d6 != nullptr, "dimension-table (3,2,1) cell present");
  if (d6) {
    c.expect(!d6->match, "d(3,2,1) flagged MISMATCH");
    c.eq(d6->paper, std::string("36"), "d(3,2,1) published value");
    c.eq(d6->oracle, std::string("16"), "d(3,2,1) recomputed value");
  }

  for (const CellComparison& x : rep.cells)
    if (!x.match)
      c.expect(!x.paper.empty() && !x.oracle.empty(),
               x.table + " " + x.cell + " carries both values");
  c.note("every MISMATCH row carries the published and the recomputed value side by side; " +
         std::string("the report classifies and never declares either side correct"));
}

// ---------------------------------------------------------------- criterion 6

void crit6(Checker& c) {
  const auto [da, db] = jet_delta(2, 2, Source::paper);
  c.eq(da, Rat(11), "Delta(J_2^2) c1^2 coefficient");
  c.eq(db, Rat(-5), "Delta(J_2^2) c2 coefficient");

  // Delta evaluated on the degree-d geometry factors as d*(6d^2 - 68d + 146)
  for (long d = 5; d <= 20; ++d) {
    const SurfaceGeometry g = hypersurface_geometry(d);
    c.eq(da * g.c1sq + db * g.c2, Rat(d * (6 * d * d - 68 * d + 146)),
         "factored evaluation at d = " + str(d));
  }
  const Rat quad8 = Rat(6 * 64 - 68 * 8 + 146);
  const Rat quad9 = Rat(6 * 81 - 68 * 9 + 146);
  c.eq(quad8, Rat(-14), "quadratic factor at d = 8");
  c.expect(quad8 < 0, "negative at d = 8");
  c.eq(quad9, Rat(20), "quadratic factor at d = 9");
  c.expect(quad9 > 0, "positive at d = 9");

  const ThresholdResult t22 = hypersurface_threshold(2, 2, Source::paper);
  c.eq(t22.d_star, 9L, "threshold degree for k = 2");
  c.eq(t22.value_at_d_star, Rat(180), "value at d = 9");
  c.eq(t22.value_before, Rat(-112), "value at d = 8");
  c.expect(t22.stable, "stays positive beyond d = 9");

  const ThresholdResult t36 = hypersurface_threshold(3, 6, Source::paper);
  c.eq(t36.d_star, 5L, "threshold degree for k = 3 (published totals)");
  c.expect(t36.stable, "k = 3 positivity stable");

  // the recomputed totals are reported alongside
  const ThresholdResult o22 = hypersurface_threshold(2, 2, Source::oracle);
  const ThresholdResult o36 = hypersurface_threshold(3, 6, Source::oracle);
  c.eq(o22.d_star, 9L, "oracle threshold for k = 2");
  c.eq(o36.d_star, 5L, "oracle threshold for k = 3");
  c.note("published sources: d* = 9 (value 180, previous degree -112) and d* = 5 (value " +
         str(t36.value_at_d_star) + ")");
  c.note("oracle sources alongside: d* = 9 (value " + str(o22.value_at_d_star) +
         ") and d* = 5 (value " + str(o36.value_at_d_star) + ")");
}

// ---------------------------------------------------------------- criterion 7

void crit7(Checker& c) {
  const JetTotals t = jet_totals(3, 6, Source::paper);
  c.eq(t.a1, Rat(101), "published c1 total");
  c.eq(t.c2a, Rat(5026), "published c2 total (c1^2 part)");
  c.eq(t.c2b, Rat(175), "published c2 total (c2 part)");

  const auto b6 = descent_bracket(3, 6, Source::paper);
  c.eq(b6.first, Rat(3357), "bracket i = 6, c1^2 coefficient");
  c.eq(b6.second, Rat(-175), "bracket i = 6, c2 coefficient");

  const SurfaceGeometry g9 = hypersurface_geometry(9);
  std::string chain;
  Rat prev;
  for (unsigned i = 1; i <= 6; ++i) {
    const Rat v = descent_value(3, i, Source::paper, g9);
    c.expect(v > 0, "bracket i = " + str(i) + " positive on the degree-9 surface (value " +
                        str(v) + ")");
    if (i > 1) c.expect(v < prev, "chain strictly decreasing at i = " + str(i));
    prev = v;
    chain += (i > 1 ? ", " : "") + str(v);
  }
  c.eq(descent_value(3, 6, Source::paper, g9), Rat(675000), "final bracket value");
  c.note("chain on c1^2 = 225, c2 = 459: " + chain);
}

// ---------------------------------------------------------------- criterion 8

void crit8(Checker& c) {
  // published normalized tuples
  const WeightTuple n1 = normalize(wt({4, 6, 12}));
  c.eq(tuple_str(n1), std::string("(1,1,6)"), "normalize((4,6,12)) published value");
  const WeightTuple n2 = normalize(wt({6, 10, 15}));
  c.eq(tuple_str(n2), std::string("(1,1,1)"), "normalize((6,10,15))");

  if (c.failures > 0) {
    using boost::multiprecision::gcd;
    const WeightTuple red = reduce(wt({4, 6, 12}));
    std::string gcds;
    for (size_t omit = 0; omit < red.size(); ++omit) {
      Int g = 0;
      for (size_t j = 0; j < red.size(); ++j)
        if (j != omit) g = gcd(g, red[j]);
      gcds += (omit ? "," : "") + g.str();
    }
    c.note("well-forming trace: reduce (4,6,12) = " + tuple_str(red) +
           "; omit-one gcds (" + gcds + ") divide out every weight, giving " + tuple_str(n1));
    c.note("both (1,1,1) and (1,1,6) are fixed points of normalize, so only one of them " +
           std::string("can be the normal form reached from (4,6,12); the well-forming steps "
                       "3 | (3,6) and then 2 | (2,2) force (1,1,1)"));
    c.note("criterion kept as stated; the published tuple (1,1,6) is not reproducible " +
           std::string("from the published well-forming procedure itself"));
  }

  // quotient degrees at the top twist
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned k = 1; k <= 4; ++k) {
      if (n * k < 2) continue;  // a single weight is a point: no twist index exists
      const WeightTuple p = pnk_tuple(n, k);
      c.eq(l_Qk(p, n * k - 1), quotient_degree(n, k),
           "l_Qk at the top twist of P_{" + str(n) + "," + str(k) + "}");
    }
  c.note("top-twist multipliers equal (k!)^n on every P_{n,k} with nk >= 2; the (1,1) " +
         std::string("tuple has r = 0 and admits no twist index at all"));

  // section counts against brute-force enumeration
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> len(2, 5), entry(1, 9), deg(0, 25);
  for (int trial = 0; trial < 200; ++trial) {
    WeightTuple q;
    const int r = len(rng);
    for (int i = 0; i < r; ++i) q.push_back(Int(entry(rng)));
    const Int m(deg(rng));
    Int brute = 0;
    {
      std::vector<Int> e(q.size(), 0);
      while (true) {
        Int d = 0;
        for (size_t i = 0; i < q.size(); ++i) d += q[i] * e[i];
        if (d == m) ++brute;
        size_t pos = 0;
        while (pos < q.size()) {
          e[pos] += 1;
          Int dd = 0;
          for (size_t i = 0; i < q.size(); ++i) dd += q[i] * e[i];
          if (dd <= m) break;
          e[pos] = 0;
          ++pos;
        }
        if (pos == q.size()) break;
      }
    }
    c.eq(section_count(q, m), brute,
         "section count on " + tuple_str(q) + " at degree " + m.str());
  }
  c.note("200 random weight tuples (r <= 4, degree <= 25) agree with direct monomial " +
         std::string("enumeration"));
}

// ---------------------------------------------------------------- criterion 9

std::mt19937 jet_rng(424242);

Rat rand_rat() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Rat(num(jet_rng), den(jet_rng));
}

Poly rand_poly(size_t nvars, unsigned max_deg, int max_terms) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<int> nt(1, max_terms);
  Poly p(nvars);
  const int terms = nt(jet_rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars);
    for (size_t v = 0; v < nvars; ++v) e[v] = deg(jet_rng);
    p.add_term(e, rand_rat());
  }
  return p;
}

PolyMap rand_map(size_t n_in, size_t n_out, unsigned max_deg) {
  PolyMap w;
  w.n_in = n_in;
  for (size_t j = 0; j < n_out; ++j) w.comps.push_back(rand_poly(n_in, max_deg, 3));
  return w;
}

CurveJet rand_jet(size_t n, unsigned k) {
  CurveJet f;
  f.n = n;
  f.k = k;
  f.derivs.assign(n, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < n; ++i)
    for (unsigned p = 0; p <= k; ++p) f.derivs[i][p] = rand_rat();
  return f;
}

JetDifferential rand_diff(unsigned k, unsigned m, size_t n) {
  JetDifferential w = make_jet_differential(k, m, n);
  const auto partitions = enumerate_weighted(m, k);
  std::uniform_int_distribution<size_t> pick(0, partitions.size() - 1);
  std::uniform_int_distribution<size_t> slot(0, n - 1);
  for (int t = 0; t < 3; ++t) {
    const auto& I = partitions[pick(jet_rng)];
    std::vector<std::vector<unsigned>> key(k, std::vector<unsigned>(n, 0));
    for (unsigned j = 0; j < k; ++j)
      for (unsigned cnt = 0; cnt < I.i[j]; ++cnt) key[j][slot(jet_rng)] += 1;
    add_jet_term(w, key, rand_poly(n, 2, 2));
  }
  return w;
}

std::vector<Poly> rand_curve(size_t n, unsigned max_deg) {
  std::vector<Poly> f;
  for (size_t i = 0; i < n; ++i) f.push_back(rand_poly(1, max_deg, 3));
  return f;
}

CurveJet curve_jet(const std::vector<Poly>& f, unsigned k) {
  CurveJet j;
  j.n = f.size();
  j.k = k;
  j.derivs.assign(j.n, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < j.n; ++i) {
    Poly d = f[i];
    for (unsigned p = 0; p <= k; ++p) {
      j.derivs[i][p] = d.eval({Rat(0)});
      d = d.derivative(0);
    }
  }
  return j;
}

void crit9(Checker& c) {
  jet_rng.seed(424242);

  // composition functoriality
  int instances = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const size_t n = 1 + (trial % 2);
    const unsigned k = 1 + (trial % 4);
    const CurveJet f = rand_jet(n, k);
    const PolyMap w = rand_map(n, n, 2);
    const PolyMap v = rand_map(n, n, 2);
    PolyMap vw;
    vw.n_in = n;
    for (const Poly& comp : v.comps) vw.comps.push_back(poly_subst(comp, w.comps));
    c.expect(compose_jet(v, compose_jet(w, f)) == compose_jet(vw, f),
             "functoriality trial " + str(trial));
    ++instances;
  }
  c.note("functoriality of jet composition: " + str(instances) + " instances");

  // weighted homogeneity under the scaling action
  instances = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const size_t n = 1 + (trial % 2);
    const unsigned k = 1 + (trial % 4);
    const unsigned m = k + (trial % 3);
    const JetDifferential w = rand_diff(k, m, n);
    const CurveJet f = rand_jet(n, k);
    for (const Rat lam : {Rat(-1), Rat(2), Rat(3)}) {
      Rat scale = 1;
      for (unsigned p = 0; p < m; ++p) scale *= lam;
      c.expect(eval_jet_differential(w, cstar_act(lam, f)) ==
                   scale * eval_jet_differential(w, f),
               "homogeneity trial " + str(trial) + " at lambda = " + str(lam));
      ++instances;
    }
  }
  c.note("weighted homogeneity of degree m under scaling: " + str(instances) + " instances");

  // the iterated total derivative reproduces the k-th derivative of a composite
  instances = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = 1 + (trial % 2);
    const unsigned k = 1 + (trial % 4);
    const Poly phi = rand_poly(n, 3, 3);
    JetDifferential w = make_jet_differential(1, 1, n);
    for (size_t i = 0; i < n; ++i) {
      std::vector<std::vector<unsigned>> key(1, std::vector<unsigned>(n, 0));
      key[0][i] = 1;
      add_jet_term(w, key, phi.derivative(i));
    }
    for (unsigned step = 1; step < k; ++step) w = d_operator(w);
    const std::vector<Poly> f = rand_curve(n, 3);
    PolyMap comp;
    comp.n_in = 1;
    comp.comps.push_back(poly_subst(phi, f));
    CurveJet t_jet{1, k, {std::vector<Rat>(k + 1)}};
    t_jet.derivs[0][1] = 1;
    const CurveJet phi_f = compose_jet(comp, t_jet);
    c.expect(eval_jet_differential(w, curve_jet(f, k)) == phi_f.derivs[0][k],
             "total-derivative trial " + str(trial));
    ++instances;
  }
  c.note("iterated total derivative against exact composite derivatives: " + str(instances) +
         " instances");

  // the comparison map identifies sign-flipped 2-jets
  instances = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const size_t n = 1 + (trial % 2);
    CurveJet f = rand_jet(n, 2);
    for (size_t i = 0; i < n; ++i)
      if (f.derivs[i][1] == 0) f.derivs[i][1] = 1;
    CurveJet g = f;
    for (size_t i = 0; i < n; ++i) g.derivs[i][1] = -f.derivs[i][1];
    c.expect(!(f == g) && p_k_map(f) == p_k_map(g), "two-to-one trial " + str(trial));
    if (n == 2) {
      CurveJet h = f;
      h.derivs[0][1] = -f.derivs[0][1];
      c.expect(p_k_map(h) != p_k_map(f), "fiber leaves when one sign flips, trial " + str(trial));
    }
    ++instances;
  }
  c.note("order-2 comparison map is exactly two-to-one off the ramification locus: " +
         str(instances) + " instances");

  // filtration leading terms under coordinate change
  instances = 0;
  for (int trial = 0; trial < 110; ++trial) {
    const unsigned j = 1 + (trial % 3);
    const unsigned k = 1 + (trial % 4);
    Poly w = rand_poly(1, 4, 3);
    w.add_term({1}, 1);  // unit linear part: a genuine coordinate change
    c.expect(filtration_leading_term_check(w, j, k),
             "filtration trial " + str(trial) + " (j=" + str(j) + ",k=" + str(k) + ")");
    ++instances;
  }
  c.note("filtration leading terms preserved under coordinate changes: " + str(instances) +
         " instances");
}

// --------------------------------------------------------------- criterion 10

void crit10(Checker& c) {
  for (unsigned n = 1; n <= 15; ++n)
    for (unsigned k = 1; k <= n; ++k)
      c.eq(surjections(n, k), factorial(k) * stirling_second(n, k),
           "surjections(" + str(n) + "," + str(k) + ")");

  for (unsigned m = 1; m <= 12; ++m) {
    Int sum = 0;
    for (const WeightedPartition& I : enumerate_weighted(m, m)) {
      std::vector<unsigned> parts;
      for (unsigned j = m; j >= 1; --j)
        for (unsigned cnt = 0; cnt < I.i[j - 1]; ++cnt) parts.push_back(j);
      const Int d = irrep_dimension(Partition{parts});
      sum += d * d;
    }
    c.eq(sum, factorial(m), "sum of d_lambda^2 over partitions of " + str(m));
  }

  for (unsigned n = 1; n <= 200; ++n) {
    const Rat diff = Rat(p_exact_parts(n, 3)) - Rat(Int(n) * n, 12);
    c.expect(diff < Rat(1, 2) && diff > Rat(-1, 2),
             "p_3(" + str(n) + ") within 1/2 of n^2/12");
  }

  for (unsigned m = 1; m <= 60; ++m)
    for (unsigned k = 1; k <= m; ++k) {
      const Asymptotics a = asymptotics(m, k);
      const Int v = factorial(k) * p_exact_parts(m, k);
      c.expect(a.lower <= v && v <= a.upper,
               "binomial bounds bracket k! p_k at (" + str(m) + "," + str(k) + ")");
    }

  const double ratio = hardy_ramanujan(100) / p_total(100).convert_to<double>();
  c.expect(ratio > 0.9 && ratio < 1.1,
           "growth-estimate ratio at m = 100 (got " + str(ratio) + ")");
  c.note("surjection and dimension identities, nearest-integer law for p_3, binomial " +
         std::string("brackets to m = 60, and the m = 100 growth ratio all hold"));
}

// --------------------------------------------------------------------- driver

struct Criterion {
  const char* title;
  void (*fn)(Checker&);
};

const Criterion kCriteria[] = {
    {"partition counts and total lengths match the published displays", crit1},
    {"curve jet Chern numbers", crit2},
    {"closed forms agree with the splitting oracle", crit3},
    {"tables I_22 and I_23 reproduce exactly from the oracle", crit4},
    {"erratum detection reports both values", crit5},
    {"hypersurface degree thresholds", crit6},
    {"descent brackets on the degree-9 surface", crit7},
    {"weighted projective invariants", crit8},
    {"jet calculus properties over randomized exact instances", crit9},
    {"combinatoric identities", crit10},
};

bool run_one(int id) {
  Checker ck;
  kCriteria[id - 1].fn(ck);
  const bool pass = ck.failures == 0;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << kCriteria[id - 1].title
            << " (" << (ck.checks - ck.failures) << "/" << ck.checks << " checks)\n";
  for (const std::string& line : ck.lines) std::cout << "    " << line << "\n";
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: acceptance [criterion 1-10]\n";
    return 2;
  }
  if (argc == 2) {
    const int id = std::atoi(argv[1]);
    if (id < 1 || id > 10) {
      std::cerr << "usage: acceptance [criterion 1-10]\n";
      return 2;
    }
    return run_one(id) ? 0 : 1;
  }

  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    if (!run_one(id)) ++failed;
    std::cout << "\n";
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  if (failed > 0)
    std::cout << "failing criteria assert published values that the exact recomputation "
                 "contradicts; see the cell-by-cell evidence above\n";
  return failed == 0 ? 0 : 1;
}
