#include <jetchern/chern_ring.hpp>

#include <stdexcept>

namespace jetchern {

SurfaceChern trivial_line() { return SurfaceChern{1, 0, 0, 0}; }
SurfaceChern zero_bundle() { return SurfaceChern{0, 0, 0, 0}; }

RootSystem sym_roots(unsigned m) {
  RootSystem r;
  r.roots.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i)
    r.roots.push_back({static_cast<long long>(m - i), static_cast<long long>(i)});
  return r;
}

RootSystem tensor_roots(const RootSystem& r1, const RootSystem& r2) {
  RootSystem r;
  r.roots.reserve(r1.roots.size() * r2.roots.size());
  for (const auto& x : r1.roots)
    for (const auto& y : r2.roots)
      r.roots.push_back({x.first + y.first, x.second + y.second});
  return r;
}

SurfaceChern oracle_from_roots(const RootSystem& r) {
  // e1 = sum of roots = P*a + Q*b; symmetry forces P == Q, and c1 = P * (a+b).
  Int P = 0, Q = 0;
  for (const auto& x : r.roots) {
    P += x.first;
    Q += x.second;
  }
  if (P != Q) throw std::logic_error("oracle_from_roots: e1 not symmetric in a, b");
  // e2 = sum over pairs = A*a^2 + B*ab + C*b^2; symmetry forces A == C, and
  // with a+b = c1, ab = c2: e2 = A*c1^2 + (B - 2A)*c2.
  Int A = 0, B = 0, C = 0;
  const size_t n = r.roots.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const auto& x = r.roots[i];
      const auto& y = r.roots[j];
      A += Int(x.first) * y.first;
      B += Int(x.first) * y.second + Int(x.second) * y.first;
      C += Int(x.second) * y.second;
    }
  if (A != C) throw std::logic_error("oracle_from_roots: e2 not symmetric in a, b");
  return SurfaceChern{Int(n), Rat(P), Rat(A), Rat(B - 2 * A)};
}

SurfaceChern sym_power_surface(unsigned m) {
  const Int M(m);
  SurfaceChern s;
  s.rank = M + 1;
  s.a1 = Rat(M * (M + 1), 2);
  s.a2 = Rat(M * (M * M - 1) * (3 * M + 2), 24);
  s.b2 = Rat(M * (M + 1) * (M + 2), 6);
  return s;
}

namespace {

// ch2 of E as a pair of coefficients on (c1^2, c2): ch2 = c1^2/2 - c2.
std::pair<Rat, Rat> ch2_of(const SurfaceChern& e) {
  return {e.a1 * e.a1 / 2 - e.a2, -e.b2};
}

SurfaceChern from_ch(const Int& rank, const Rat& a1, const std::pair<Rat, Rat>& ch2) {
  return SurfaceChern{rank, a1, a1 * a1 / 2 - ch2.first, -ch2.second};
}

}  // namespace

SurfaceChern tensor_ch(const SurfaceChern& e, const SurfaceChern& f) {
  // ch(E (x) F) = ch(E) ch(F):
  //   ch0 = r_E r_F
  //   ch1 = r_F c1(E) + r_E c1(F)
  //   ch2 = r_F ch2(E) + c1(E) c1(F) + r_E ch2(F)
  const Rat rE(e.rank), rF(f.rank);
  const auto cE = ch2_of(e), cF = ch2_of(f);
  const Rat a1 = rF * e.a1 + rE * f.a1;
  std::pair<Rat, Rat> ch2{rF * cE.first + e.a1 * f.a1 + rE * cF.first,
                          rF * cE.second + rE * cF.second};
  return from_ch(e.rank * f.rank, a1, ch2);
}

SurfaceChern tensor_closed_form(const std::vector<SurfaceChern>& factors) {
  if (factors.empty()) return trivial_line();
  Int prod_rank = 1;
  for (const auto& f : factors) {
    if (f.rank <= 0) throw std::domain_error("tensor_closed_form: ranks must be positive");
    prod_rank *= f.rank;
  }
  const Rat R(prod_rank);
  // c1 = (prod r_i) * sum c1_i / r_i
  Rat a1 = 0;
  for (const auto& f : factors) a1 += f.a1 / Rat(f.rank);
  a1 *= R;
  // c2 = (prod r_i) * sum (c2_i/r_i - c1_i^2/(2 r_i)) + (prod r_i)^2/2 * (sum c1_i/r_i)^2
  Rat a2 = 0, b2 = 0, s1 = 0;
  for (const auto& f : factors) {
    const Rat r(f.rank);
    a2 += f.a2 / r - f.a1 * f.a1 / (2 * r);
    b2 += f.b2 / r;
    s1 += f.a1 / r;
  }
  a2 = R * a2 + R * R / 2 * (s1 * s1);
  b2 = R * b2;
  return SurfaceChern{prod_rank, a1, a2, b2};
}

SurfaceChern whitney(const SurfaceChern& e, const SurfaceChern& q) {
  // c(E (+) Q) = c(E) c(Q) through degree 2
  SurfaceChern s;
  s.rank = e.rank + q.rank;
  s.a1 = e.a1 + q.a1;
  s.a2 = e.a2 + q.a2 + e.a1 * q.a1;
  s.b2 = e.b2 + q.b2;
  return s;
}

SurfaceChern factor_bundle(const WeightedPartition& I) {
  SurfaceChern s = trivial_line();
  for (unsigned ij : I.i) s = tensor_ch(s, sym_power_surface(ij));
  return s;
}

RootSystem factor_roots(const WeightedPartition& I) {
  RootSystem r = sym_roots(0);
  for (unsigned ij : I.i) r = tensor_roots(r, sym_roots(ij));
  return r;
}

Rat cor23_c1(const WeightedPartition& I) {
  Int prod = 1, sum = 0;
  for (unsigned ij : I.i) {
    prod *= ij + 1;
    sum += ij;
  }
  return Rat(sum * prod, 2);
}

std::pair<Int, Rat> sym_rank_c1_general(unsigned m, unsigned r) {
  if (r == 0) throw std::domain_error("sym_rank_c1_general: rank must be positive");
  const Int rank = binomial(Int(m) + r - 1, m);
  // c1 multiplier: (1/r!) (m+r-1)!/(m-1)! = (m/r) * rank; zero when m = 0
  Rat c1 = m == 0 ? Rat(0) : Rat(Int(m) * rank, r);
  return {rank, c1};
}

Int full_jet_rank(unsigned n, unsigned k) {
  Int s = 0;
  for (unsigned i = 1; i <= k; ++i) s += binomial(Int(n) + i - 1, i);
  return s;
}

CurveChern full_jet_c1_curve(unsigned k) {
  return CurveChern{Int(k), Rat(Int(k) * (k + 1), 2)};
}

}  // namespace jetchern
