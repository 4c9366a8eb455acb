#include <jetchern/positivity.hpp>

#include <stdexcept>

namespace jetchern {

SurfaceGeometry hypersurface_geometry(long d) {
  if (d < 5 || d > 1000)
    throw std::domain_error("hypersurface_geometry: degree must be in [5, 1000]");
  const Int D(d);
  SurfaceGeometry g;
  g.c1sq = Rat(D * (D - 4) * (D - 4));
  g.c2 = Rat(D * (D * D - 4 * D + 6));
  g.pg_positive = true;      // p_g = C(d-1, 3) > 0 for d >= 5
  g.picard_rank_one = true;  // generic member, d >= 5
  return g;
}

bool noether_warning(const SurfaceGeometry& g) {
  const Rat lhs = 5 * g.c1sq - g.c2;
  return lhs + 36 < 0 && lhs + 30 < 0;
}

DeltaSequence delta_sequence(const SurfaceChern& e, unsigned n) {
  if (n > 2) throw std::domain_error("delta_sequence: only n <= 2 supported");
  DeltaSequence s;
  s.upto = n;
  s.d0 = 1;
  if (n >= 1) s.d1 = e.a1;
  if (n >= 2) {
    s.d2_a = e.a1 * e.a1 - e.a2;
    s.d2_b = -e.b2;
  }
  return s;
}

std::pair<Rat, Rat> jet_delta(unsigned k, unsigned m, Source source) {
  if (source == Source::paper) {
    const GoldenTable* t = find_golden_table(k, m);
    if (!t || !t->totals.delta_a)
      throw std::invalid_argument("jet_delta: no published totals for this (k, m)");
    return {*t->totals.delta_a, *t->totals.delta_b};
  }
  const JetSheafReport rep = jet_chern_surface(k, m);
  return {rep.delta_a, rep.delta_b};
}

JetTotals jet_totals(unsigned k, unsigned m, Source source) {
  if (source == Source::paper) {
    const GoldenTable* t = find_golden_table(k, m);
    if (!t || !t->totals.c1 || !t->totals.c2_a)
      throw std::invalid_argument("jet_totals: no published totals for this (k, m)");
    return {*t->totals.c1, *t->totals.c2_a, *t->totals.c2_b};
  }
  const JetSheafReport rep = jet_chern_surface(k, m);
  return {rep.total.a1, rep.total.a2, rep.total.b2};
}

Rat intersection_number(unsigned n, unsigned k, unsigned j, const SurfaceChern& e,
                        const DivisorData& div) {
  if (n != 2) throw std::domain_error("intersection_number: only surfaces (n = 2)");
  if (j > 2) throw std::domain_error("intersection_number: j <= n");
  const Rat scale(boost::multiprecision::pow(factorial(k), n));
  switch (j) {
    case 0:
      if (!div.d1_dot_d2) throw std::invalid_argument("intersection_number: D_1.D_2 missing");
      return scale * *div.d1_dot_d2;
    case 1:
      if (!div.c1e_dot_d) throw std::invalid_argument("intersection_number: c1(E).D missing");
      return scale * *div.c1e_dot_d;
    default: {
      if (!div.geometry) throw std::invalid_argument("intersection_number: geometry missing");
      const DeltaSequence s = delta_sequence(e, 2);
      return scale * (s.d2_a * div.geometry->c1sq + s.d2_b * div.geometry->c2);
    }
  }
}

Certificate bigness_certificate(unsigned k, const SurfaceGeometry& g, Source source) {
  if (k == 0 || k > 6) throw std::domain_error("bigness_certificate: k in [1, 6]");
  Certificate c;
  c.k = k;
  const Int m = factorial(k);  // critical weight: the slopes all become integral
  c.m = m.convert_to<unsigned>();
  std::tie(c.delta_a, c.delta_b) = jet_delta(k, c.m, source);
  c.value = c.delta_a * g.c1sq + c.delta_b * g.c2;
  c.rr_leading = c.value / Rat(factorial(3 * k - 1));
  c.hypotheses_ok = g.pg_positive;
  c.noether_flag = noether_warning(g);
  c.status = (c.value > 0 && c.hypotheses_ok) ? Certificate::Status::big
                                              : Certificate::Status::inconclusive;
  return c;
}

SlopeResult slope_and_bound(const WeightedPartition& I, const SurfaceGeometry& g) {
  if (g.c1sq <= 0) throw std::domain_error("slope_and_bound: need c1sq > 0");
  const SurfaceChern e = factor_bundle(I);
  SlopeResult r;
  r.mu = e.a1 / Rat(e.rank) * g.c1sq;
  r.bound = Rat(I.m(), 2) * g.c1sq;
  r.within = r.mu <= r.bound;
  bool concentrated = I.i.empty() || I.i[0] == I.m();
  for (size_t j = 1; j < I.i.size(); ++j)
    if (I.i[j] != 0) concentrated = false;
  r.equality = r.mu == r.bound;
  // equality must coincide with the concentrated shape (m, 0, ..., 0)
  if (r.equality != concentrated)
    throw std::logic_error("slope_and_bound: equality pattern violated");
  return r;
}

bool jet_slope_bound_check(unsigned k, unsigned m, const SurfaceGeometry& g) {
  for (const auto& I : enumerate_weighted(m, k)) {
    const SlopeResult r = slope_and_bound(I, g);
    if (!r.within) return false;
    const bool concentrated = I.i[0] == m;
    if (concentrated != r.equality) return false;
  }
  // the whole bundle sits strictly below the bound once k >= 2
  if (k >= 2) {
    const JetSheafReport rep = jet_chern_surface(k, m);
    if (!(rep.mu_total * g.c1sq < Rat(m, 2) * g.c1sq)) return false;
  }
  return true;
}

CIChern complete_intersection_chern(unsigned n, const std::vector<unsigned>& degrees) {
  if (degrees.empty() || degrees.size() >= n)
    throw std::domain_error("complete_intersection_chern: need 1 <= #degrees < n");
  for (unsigned d : degrees)
    if (d == 0) throw std::domain_error("complete_intersection_chern: degrees positive");
  CIChern x;
  x.dim = n - static_cast<unsigned>(degrees.size());
  // complete homogeneous symmetric sums h_0, h_1, h_2 of the degrees
  Int h0 = 1, h1 = 0, h2 = 0;
  for (size_t i = 0; i < degrees.size(); ++i) {
    h1 += degrees[i];
    for (size_t j = i; j < degrees.size(); ++j) h2 += Int(degrees[i]) * degrees[j];
  }
  // c_q(TX) = sum_{i<=q} (-1)^i C(n+1, q-i) h_i * theta^q, restricted to X
  const Rat c1_tx = Rat(binomial(Int(n) + 1, 1)) - Rat(h1);
  const Rat c2_tx = Rat(binomial(Int(n) + 1, 2)) - Rat(binomial(Int(n) + 1, 1) * h1) + Rat(h2);
  x.c1 = -c1_tx;  // cotangent sign flip in degree 1
  x.c2 = c2_tx;   // even degree: unchanged
  x.theta_top = 1;
  for (unsigned d : degrees) x.theta_top *= d;
  return x;
}

ThresholdResult hypersurface_threshold(unsigned k, unsigned m, Source source) {
  const auto [da, db] = jet_delta(k, m, source);
  ThresholdResult r;
  Rat prev = 0;
  for (long d = 5; d <= 1000; ++d) {
    const SurfaceGeometry g = hypersurface_geometry(d);
    const Rat v = da * g.c1sq + db * g.c2;
    if (r.d_star == 0 && v > 0) {
      r.d_star = d;
      r.value_at_d_star = v;
      r.value_before = (d > 5) ? prev : Rat(0);
      r.stable = true;
    } else if (r.d_star != 0 && v <= 0) {
      r.stable = false;
    }
    prev = v;
  }
  if (r.d_star == 0)
    throw std::domain_error("hypersurface_threshold: no positive degree up to 1000");
  return r;
}

std::pair<Rat, Rat> descent_bracket(unsigned k, unsigned i, Source source) {
  if (k == 0 || k > 6) throw std::domain_error("descent_bracket: k in [1, 6]");
  if (i > 2 * k) throw std::domain_error("descent_bracket: i in [0, 2k]");
  const Int m = factorial(k);
  const JetTotals t = jet_totals(k, m.convert_to<unsigned>(), source);
  const Rat a1 = t.a1;
  return {a1 * (a1 - Rat(m * i, 2)) - t.c2a, -t.c2b};
}

Rat descent_value(unsigned k, unsigned i, Source source, const SurfaceGeometry& g) {
  const auto [a, b] = descent_bracket(k, i, source);
  return a * g.c1sq + b * g.c2;
}

}  // namespace jetchern
