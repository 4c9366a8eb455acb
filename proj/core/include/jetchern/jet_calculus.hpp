#pragma once

#include <jetchern/rational.hpp>

#include <map>
#include <vector>

namespace jetchern {

// Sparse multivariate polynomial over Rat.  Keys are exponent vectors of a
// fixed width, so repeated factors are canonicalized by construction.
class Poly {
 public:
  Poly() = default;
  explicit Poly(size_t nvars) : nvars_(nvars) {}
  static Poly constant(size_t nvars, const Rat& c);
  static Poly var(size_t nvars, size_t idx);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<unsigned>, Rat>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly pow(unsigned e) const;
  Poly derivative(size_t idx) const;
  Rat eval(const std::vector<Rat>& x) const;
  unsigned degree_in(size_t idx) const;  // 0 for the zero polynomial

  void add_term(std::vector<unsigned> exp, const Rat& c);
  bool operator==(const Poly&) const = default;

 private:
  size_t nvars_ = 0;
  std::map<std::vector<unsigned>, Rat> terms_;
};

// Substitute args[i] for variable i; all args share one arity.
Poly poly_subst(const Poly& p, const std::vector<Poly>& args);

// Substitute arg for the single variable of a univariate polynomial.
Poly poly_apply(const Poly& univariate, const Poly& arg);

// Polynomial map w : C^{n_in} -> C^{comps.size()}.
struct PolyMap {
  size_t n_in = 0;
  std::vector<Poly> comps;  // each in n_in variables
};

// k-jet of a holomorphic germ f : (C, 0) -> C^n as raw derivatives:
// derivs[i][p] = f_i^(p)(0) for p = 0..k.
struct CurveJet {
  size_t n = 0;
  unsigned k = 0;
  std::vector<std::vector<Rat>> derivs;
  bool operator==(const CurveJet&) const = default;
};

// Jet of w o f via truncated power-series composition (exact).
CurveJet compose_jet(const PolyMap& w, const CurveJet& f);

// Reparametrization action: t -> lambda t scales f^(p) by lambda^p.
CurveJet cstar_act(const Rat& lambda, const CurveJet& f);

// Jet differential of order k and weight m on C^n: a sum of monomials
//   a_I(z) * prod_j prod_i (f_i^(j))^{I_j[i]},   sum_j j*|I_j| = m.
// Keys store (I_1, ..., I_k) as exponent vectors of width n.
struct JetDifferential {
  unsigned k = 0, m = 0;
  size_t n = 0;
  std::map<std::vector<std::vector<unsigned>>, Poly> terms;
};

JetDifferential make_jet_differential(unsigned k, unsigned m, size_t n);

// Adds coeff * the monomial I; validates shape and weight.
void add_jet_term(JetDifferential& w, const std::vector<std::vector<unsigned>>& I,
                  const Poly& coeff);

Rat eval_jet_differential(const JetDifferential& w, const CurveJet& f);

// Total derivative: order k+1, weight m+1.  Satisfies
// d(w)(f) = (d/dt)|_0 [t -> w(f shifted to t)] in the sense of the evaluation
// identity tested against finite jets.
JetDifferential d_operator(const JetDifferential& w);

// Comparison map from the k-jet of f to a constant-coefficient differential
// operator: exponent vector over (d/dz_1, ..., d/dz_n) -> coefficient,
//   sum_{j=1..k} sum_i sum_{i_1..i_{k-j}} f_i^(j) f_{i_1}' ... f_{i_{k-j}}'
// on d^{k-j+1}/dz_i dz_{i_1} ... dz_{i_{k-j}}.
std::map<std::vector<unsigned>, Rat> p_k_map(const CurveJet& f);

// Linear-type jet differential on a curve coordinate (n = 1):
//   sum_{j=1..k} a_j(f(0)) f^(j)(0) (f'(0))^{k-j},  coeffs[j-1] = a_j.
Rat linear_type_eval(const std::vector<Poly>& coeffs, const CurveJet& f);

// For a coordinate change w (univariate polynomial), checks that
// ((w o f)^(k))^j == (w'(f(0)))^j (f^(k))^j  modulo monomials with fewer
// than j factors of f^(k), i.e. the graded leading term transforms like a
// section of (Sym^j of the k-th filtration quotient).
bool filtration_leading_term_check(const Poly& w, unsigned j, unsigned k);

}  // namespace jetchern
