#pragma once

#include <jetchern/combinatorics.hpp>
#include <jetchern/rational.hpp>

#include <utility>
#include <vector>

namespace jetchern {

// Chern data of a bundle on a surface X, expressed on the cotangent basis:
//   c1(E) = a1 * c1(T*X)
//   c2(E) = a2 * c1(T*X)^2 + b2 * c2(T*X)
// All arithmetic is exact; rank 0 is allowed only for the Whitney identity.
struct SurfaceChern {
  Int rank = 0;
  Rat a1 = 0;
  Rat a2 = 0;
  Rat b2 = 0;
  bool operator==(const SurfaceChern&) const = default;
};

// Chern data on a curve: c1(E) = kappa * c1(T*X) = kappa * K_X.
struct CurveChern {
  Int rank = 0;
  Rat kappa = 0;
  bool operator==(const CurveChern&) const = default;
};

// Formal Chern roots p*a + q*b over the rank-2 cotangent bundle with roots
// a, b (so c1 = a + b, c2 = a*b).  This is the independent consistency
// oracle: any expression it disagrees with is wrong.
struct RootSystem {
  std::vector<std::pair<long long, long long>> roots;
};

SurfaceChern trivial_line();  // rank-1 trivial bundle
SurfaceChern zero_bundle();   // rank-0 Whitney identity

RootSystem sym_roots(unsigned m);  // roots of Sym^m of the rank-2 base
RootSystem tensor_roots(const RootSystem& r1, const RootSystem& r2);

// Expand e1/e2 of the roots and identify coefficients against the symmetric
// functions of (a, b).  Throws std::logic_error if the root multiset is not
// symmetric under a <-> b (it always is for the bundles we build).
SurfaceChern oracle_from_roots(const RootSystem& r);

// Closed form for Sym^m T*X on a surface:
//   rank m+1, c1 = m(m+1)/2 * c1,
//   c2 = m(m^2-1)(3m+2)/24 * c1^2 + m(m+1)(m+2)/6 * c2.
SurfaceChern sym_power_surface(unsigned m);

// Tensor product via the Chern character (exact through degree 2).
SurfaceChern tensor_ch(const SurfaceChern& e, const SurfaceChern& f);

// Published closed form for c1/c2 of a tensor product of several factors,
// kept verbatim for auditing; known to disagree with tensor_ch (and the root
// oracle) on some inputs, so never used in computations.
SurfaceChern tensor_closed_form(const std::vector<SurfaceChern>& factors);

// Whitney sum formula through degree 2 (exact on a surface).
SurfaceChern whitney(const SurfaceChern& e, const SurfaceChern& q);

// Chern data of the graded factor S_I = Sym^{i_1}T*X (x) ... (x) Sym^{i_k}T*X,
// computed by folding tensor_ch.  factor_roots gives the same bundle's roots.
SurfaceChern factor_bundle(const WeightedPartition& I);
RootSystem factor_roots(const WeightedPartition& I);

// Published c1 formula for S_I: (sum i_j)/2 * prod(i_j + 1), a multiple of
// c1(T*X).  Agrees with factor_bundle (rank * sum(i_j) / 2).
Rat cor23_c1(const WeightedPartition& I);

// (rank, c1 multiplier) of Sym^m E for E of rank r on any base:
//   rank = C(m+r-1, m),  c1 = (m/r) * rank * c1(E).
std::pair<Int, Rat> sym_rank_c1_general(unsigned m, unsigned r);

// Rank of the full k-jet bundle on an n-fold: sum_{i=1..k} C(n+i-1, i).
Int full_jet_rank(unsigned n, unsigned k);

// Full k-jet bundle of a curve: rank k, c1 = k(k+1)/2 * K_X.
CurveChern full_jet_c1_curve(unsigned k);

}  // namespace jetchern
