#include <jetchern/jet_calculus.hpp>

#include <stdexcept>

namespace jetchern {

Poly Poly::constant(size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(std::vector<unsigned>(nvars, 0), c);
  return p;
}

Poly Poly::var(size_t nvars, size_t idx) {
  if (idx >= nvars) throw std::domain_error("Poly::var: index out of range");
  Poly p(nvars);
  std::vector<unsigned> e(nvars, 0);
  e[idx] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

void Poly::add_term(std::vector<unsigned> exp, const Rat& c) {
  if (exp.size() != nvars_) throw std::domain_error("Poly::add_term: wrong arity");
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exp), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("Poly: arity mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Rat(-1); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("Poly: arity mismatch");
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<unsigned> e(nvars_);
      for (size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(std::move(e), c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::derivative(size_t idx) const {
  if (idx >= nvars_) throw std::domain_error("Poly::derivative: index out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    std::vector<unsigned> d = e;
    d[idx] -= 1;
    r.add_term(std::move(d), c * Rat(e[idx]));
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
  if (x.size() != nvars_) throw std::domain_error("Poly::eval: wrong arity");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < nvars_; ++i)
      for (unsigned p = 0; p < e[i]; ++p) t *= x[i];
    s += t;
  }
  return s;
}

unsigned Poly::degree_in(size_t idx) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    if (e[idx] > d) d = e[idx];
  return d;
}

Poly poly_subst(const Poly& p, const std::vector<Poly>& args) {
  if (args.size() != p.nvars()) throw std::domain_error("poly_subst: wrong argument count");
  const size_t out_vars = args.empty() ? 0 : args[0].nvars();
  for (const auto& a : args)
    if (a.nvars() != out_vars) throw std::domain_error("poly_subst: mixed arities");
  Poly r(out_vars);
  for (const auto& [e, c] : p.terms()) {
    Poly t = Poly::constant(out_vars, c);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) t = t * args[v].pow(e[v]);
    r = r + t;
  }
  return r;
}

Poly poly_apply(const Poly& univariate, const Poly& arg) {
  if (univariate.nvars() != 1) throw std::domain_error("poly_apply: need a univariate polynomial");
  return poly_subst(univariate, {arg});
}

namespace {

// Truncated power series with coefficients in C (Rat, or Poly for symbolic
// jets).  All series here share the fixed truncation order of the caller.
template <class C>
std::vector<C> series_mul(const std::vector<C>& x, const std::vector<C>& y, const C& zero,
                          unsigned k) {
  std::vector<C> r(k + 1, zero);
  for (unsigned i = 0; i <= k; ++i)
    for (unsigned j = 0; i + j <= k; ++j) r[i + j] = r[i + j] + x[i] * y[j];
  return r;
}

// Evaluate the polynomial w at series arguments (one per variable).
template <class C>
std::vector<C> poly_on_series(const Poly& w, const std::vector<std::vector<C>>& args,
                              const C& zero, const C& one, unsigned k) {
  std::vector<C> acc(k + 1, zero);
  for (const auto& [e, c] : w.terms()) {
    std::vector<C> t(k + 1, zero);
    t[0] = one * c;
    for (size_t v = 0; v < e.size(); ++v)
      for (unsigned p = 0; p < e[v]; ++p) t = series_mul(t, args[v], zero, k);
    for (unsigned i = 0; i <= k; ++i) acc[i] = acc[i] + t[i];
  }
  return acc;
}

void check_jet(const CurveJet& f) {
  if (f.derivs.size() != f.n) throw std::domain_error("CurveJet: component count != n");
  for (const auto& d : f.derivs)
    if (d.size() != f.k + 1) throw std::domain_error("CurveJet: need derivatives 0..k");
}

}  // namespace

CurveJet compose_jet(const PolyMap& w, const CurveJet& f) {
  check_jet(f);
  if (w.n_in != f.n) throw std::domain_error("compose_jet: arity mismatch");
  const unsigned k = f.k;
  // Taylor series of each coordinate: c[p] = f_i^(p)/p!
  std::vector<std::vector<Rat>> args(f.n, std::vector<Rat>(k + 1, Rat(0)));
  Rat fact = 1;
  for (unsigned p = 0; p <= k; ++p) {
    if (p > 0) fact *= p;
    for (size_t i = 0; i < f.n; ++i) args[i][p] = f.derivs[i][p] / fact;
  }
  CurveJet g;
  g.n = w.comps.size();
  g.k = k;
  g.derivs.assign(g.n, std::vector<Rat>(k + 1, Rat(0)));
  for (size_t j = 0; j < w.comps.size(); ++j) {
    auto s = poly_on_series<Rat>(w.comps[j], args, Rat(0), Rat(1), k);
    Rat pf = 1;
    for (unsigned p = 0; p <= k; ++p) {
      if (p > 0) pf *= p;
      g.derivs[j][p] = s[p] * pf;
    }
  }
  return g;
}

CurveJet cstar_act(const Rat& lambda, const CurveJet& f) {
  check_jet(f);
  if (lambda == 0) throw std::domain_error("cstar_act: lambda must be nonzero");
  CurveJet g = f;
  for (size_t i = 0; i < f.n; ++i) {
    Rat lp = 1;
    for (unsigned p = 0; p <= f.k; ++p) {
      g.derivs[i][p] = f.derivs[i][p] * lp;
      lp *= lambda;
    }
  }
  return g;
}

JetDifferential make_jet_differential(unsigned k, unsigned m, size_t n) {
  if (k == 0 || n == 0) throw std::domain_error("make_jet_differential: k and n must be positive");
  JetDifferential w;
  w.k = k;
  w.m = m;
  w.n = n;
  return w;
}

void add_jet_term(JetDifferential& w, const std::vector<std::vector<unsigned>>& I,
                  const Poly& coeff) {
  if (I.size() != w.k) throw std::domain_error("add_jet_term: need k exponent blocks");
  unsigned weight = 0;
  for (unsigned j = 0; j < w.k; ++j) {
    if (I[j].size() != w.n) throw std::domain_error("add_jet_term: block arity != n");
    for (unsigned e : I[j]) weight += (j + 1) * e;
  }
  if (weight != w.m) throw std::domain_error("add_jet_term: weight != m");
  if (coeff.nvars() != w.n) throw std::domain_error("add_jet_term: coefficient arity != n");
  if (coeff.is_zero()) return;
  auto it = w.terms.find(I);
  if (it == w.terms.end()) {
    w.terms.emplace(I, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) w.terms.erase(it);
  }
}

Rat eval_jet_differential(const JetDifferential& w, const CurveJet& f) {
  check_jet(f);
  if (f.n != w.n) throw std::domain_error("eval_jet_differential: arity mismatch");
  if (f.k < w.k) throw std::domain_error("eval_jet_differential: jet order too small");
  std::vector<Rat> z0(w.n);
  for (size_t i = 0; i < w.n; ++i) z0[i] = f.derivs[i][0];
  Rat s = 0;
  for (const auto& [I, a] : w.terms) {
    Rat t = a.eval(z0);
    for (unsigned j = 0; j < w.k; ++j)
      for (size_t i = 0; i < w.n; ++i)
        for (unsigned p = 0; p < I[j][i]; ++p) t *= f.derivs[i][j + 1];
    s += t;
  }
  return s;
}

JetDifferential d_operator(const JetDifferential& w) {
  JetDifferential r = make_jet_differential(w.k + 1, w.m + 1, w.n);
  for (const auto& [I, a] : w.terms) {
    // widen the key by one (empty) block for derivative order k+1
    std::vector<std::vector<unsigned>> base = I;
    base.push_back(std::vector<unsigned>(w.n, 0));
    // (i) derivative of the coefficient: d a = sum_i (da/dz_i) f_i'
    for (size_t i = 0; i < w.n; ++i) {
      Poly da = a.derivative(i);
      if (da.is_zero()) continue;
      auto key = base;
      key[0][i] += 1;
      add_jet_term(r, key, da);
    }
    // (ii) product rule on the jet factors: f_i^(j) -> f_i^(j+1)
    for (unsigned j = 0; j < w.k; ++j)
      for (size_t i = 0; i < w.n; ++i) {
        if (I[j][i] == 0) continue;
        auto key = base;
        key[j][i] -= 1;
        key[j + 1][i] += 1;
        add_jet_term(r, key, a * Rat(I[j][i]));
      }
  }
  return r;
}

std::map<std::vector<unsigned>, Rat> p_k_map(const CurveJet& f) {
  check_jet(f);
  const unsigned k = f.k;
  const size_t n = f.n;
  if (k == 0) throw std::domain_error("p_k_map: k must be positive");
  std::map<std::vector<unsigned>, Rat> out;
  for (unsigned j = 1; j <= k; ++j) {
    const unsigned t = k - j;  // number of first-derivative factors
    // odometer over ordered tuples (i_1..i_t) in [0,n)^t
    std::vector<size_t> tup(t, 0);
    while (true) {
      for (size_t i = 0; i < n; ++i) {
        Rat c = f.derivs[i][j];
        std::vector<unsigned> e(n, 0);
        e[i] += 1;
        for (size_t l = 0; l < t; ++l) {
          c *= f.derivs[tup[l]][1];
          e[tup[l]] += 1;
        }
        if (c == 0) continue;
        auto it = out.find(e);
        if (it == out.end())
          out.emplace(std::move(e), c);
        else {
          it->second += c;
          if (it->second == 0) out.erase(it);
        }
      }
      size_t pos = 0;
      while (pos < t && ++tup[pos] == n) tup[pos++] = 0;
      if (pos == t) break;
    }
  }
  return out;
}

Rat linear_type_eval(const std::vector<Poly>& coeffs, const CurveJet& f) {
  check_jet(f);
  if (f.n != 1) throw std::domain_error("linear_type_eval: curve coordinates only (n = 1)");
  const unsigned k = static_cast<unsigned>(coeffs.size());
  if (f.k < k) throw std::domain_error("linear_type_eval: jet order too small");
  const std::vector<Rat> z0{f.derivs[0][0]};
  Rat s = 0;
  for (unsigned j = 1; j <= k; ++j) {
    Rat t = coeffs[j - 1].eval(z0) * f.derivs[0][j];
    for (unsigned p = 0; p < k - j; ++p) t *= f.derivs[0][1];
    s += t;
  }
  return s;
}

bool filtration_leading_term_check(const Poly& w, unsigned j, unsigned k) {
  if (w.nvars() != 1) throw std::domain_error("filtration_leading_term_check: univariate w");
  if (j == 0 || k == 0) throw std::domain_error("filtration_leading_term_check: j, k >= 1");
  const size_t nv = k + 1;  // symbolic jet entries u_0..u_k
  const Poly zero(nv), one = Poly::constant(nv, 1);
  // symbolic Taylor series of f: coefficient p is u_p/p!
  std::vector<std::vector<Poly>> args(1, std::vector<Poly>(k + 1, zero));
  Rat fact = 1;
  for (unsigned p = 0; p <= k; ++p) {
    if (p > 0) fact *= p;
    args[0][p] = Poly::var(nv, p) * (Rat(1) / fact);
  }
  auto s = poly_on_series<Poly>(w, args, zero, one, k);
  const Poly wf_k = s[k] * Rat(factorial(k));  // (w o f)^(k) as a Poly in u_0..u_k
  const Poly lead = poly_apply(w.derivative(0), Poly::var(nv, 0));
  const Poly diff = wf_k.pow(j) - (lead.pow(j) * Poly::var(nv, k).pow(j));
  return diff.degree_in(k) < j;
}

}  // namespace jetchern
