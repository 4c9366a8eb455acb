#include <jetchern/wps.hpp>

#include <numeric>
#include <stdexcept>

namespace jetchern {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

void check_weights(const WeightTuple& q) {
  if (q.size() < 2) throw std::domain_error("weight tuple needs at least two entries");
  for (const Int& w : q)
    if (w <= 0) throw std::domain_error("weights must be positive");
}

Int gcd_all(const WeightTuple& q) {
  Int g = 0;
  for (const Int& w : q) g = gcd(g, w);
  return g;
}

}  // namespace

WeightTuple reduce(const WeightTuple& q) {
  check_weights(q);
  const Int g = gcd_all(q);
  WeightTuple r(q);
  for (Int& w : r) w /= g;
  return r;
}

WeightTuple normalize(const WeightTuple& q0) {
  WeightTuple q = reduce(q0);
  const size_t n = q.size();
  // d_i = gcd of all entries except q_i
  std::vector<Int> d(n);
  for (size_t i = 0; i < n; ++i) {
    Int g = 0;
    for (size_t j = 0; j < n; ++j)
      if (j != i) g = gcd(g, q[j]);
    d[i] = g;
  }
  // a_i = lcm of the d_j omitting d_i; a_i divides q_i for a reduced tuple
  WeightTuple r(n);
  for (size_t i = 0; i < n; ++i) {
    Int a = 1;
    for (size_t j = 0; j < n; ++j)
      if (j != i) a = lcm(a, d[j]);
    if (q[i] % a != 0)
      throw std::logic_error("normalize: a_i does not divide q_i (tuple not reduced?)");
    r[i] = q[i] / a;
  }
  return reduce(r);
}

Int m_Q(const WeightTuple& q) {
  check_weights(q);
  Int l = 1;
  for (const Int& w : q) l = lcm(l, w);
  return l;
}

Rat very_ample_bound(const WeightTuple& q) {
  check_weights(q);
  const size_t n = q.size();  // r + 1
  const unsigned r = static_cast<unsigned>(n - 1);
  if (r == 0) throw std::domain_error("very_ample_bound: need r >= 1");
  Int size_Q = 0;
  for (const Int& w : q) size_Q += w;
  // sum over subset cardinalities nu = 2 .. r+1 of [sum of lcm over nu-subsets] / C(r-1, nu-2)
  Rat acc = 0;
  for (unsigned nu = 2; nu <= n; ++nu) {
    Int s = 0;
    // enumerate nu-subsets by combination odometer
    std::vector<unsigned> idx(nu);
    for (unsigned i = 0; i < nu; ++i) idx[i] = i;
    while (true) {
      Int l = 1;
      for (unsigned i : idx) l = lcm(l, q[i]);
      s += l;
      int pos = static_cast<int>(nu) - 1;
      while (pos >= 0 && idx[pos] == n - nu + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (unsigned i = pos + 1; i < nu; ++i) idx[i] = idx[i - 1] + 1;
    }
    acc += Rat(s, binomial(Int(r) - 1, nu - 2));
  }
  return -Rat(size_Q) + acc / Rat(r);
}

Int l_Qk(const WeightTuple& q, unsigned k, GcdMode mode) {
  check_weights(q);
  const size_t n = q.size();
  if (k + 1 > n) throw std::domain_error("l_Qk: k + 1 exceeds tuple length");
  Int acc = 1;
  std::vector<unsigned> idx(k + 1);
  for (unsigned i = 0; i <= k; ++i) idx[i] = i;
  while (true) {
    Int prod = 1, g = 0;
    for (unsigned i : idx) {
      prod *= q[i];
      g = gcd(g, q[i]);
    }
    if (mode == GcdMode::prefix) {
      // as printed: gcd runs over the whole prefix q_0..q_{i_k}
      g = 0;
      for (unsigned i = 0; i <= idx[k]; ++i) g = gcd(g, q[i]);
    }
    acc = lcm(acc, prod / g);
    int pos = static_cast<int>(k);
    while (pos >= 0 && idx[pos] == n - (k + 1) + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = pos + 1; i <= k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return acc;
}

Int section_count(const WeightTuple& q, const Int& m) {
  check_weights(q);
  if (m < 0) return 0;
  if (m > 1000000) throw std::domain_error("section_count: degree too large");
  const size_t deg = m.convert_to<size_t>();
  // knapsack: number of solutions of sum q_i x_i = m with x_i >= 0
  std::vector<Int> dp(deg + 1, 0);
  dp[0] = 1;
  for (const Int& w : q) {
    const size_t step = w.convert_to<size_t>();
    for (size_t v = step; v <= deg; ++v) dp[v] += dp[v - step];
  }
  return dp[deg];
}

CohomologyDims cohomology_dims(const WeightTuple& q, const Int& p) {
  check_weights(q);
  const unsigned r = static_cast<unsigned>(q.size() - 1);
  Int size_Q = 0;
  for (const Int& w : q) size_Q += w;
  CohomologyDims c;
  c.h0 = section_count(q, p);
  c.mids = 0;
  c.hr = section_count(q, -p - size_Q);
  c.chi = (r % 2 == 0) ? Int(c.h0 + c.hr) : Int(c.h0 - c.hr);
  return c;
}

bool locally_free(const WeightTuple& q, const Int& m) { return m % m_Q(q) == 0; }

WeightTuple pnk_tuple(unsigned n, unsigned k) {
  if (n == 0 || k == 0) throw std::domain_error("pnk_tuple: n and k must be positive");
  WeightTuple q;
  q.reserve(static_cast<size_t>(n) * k);
  for (unsigned j = 1; j <= k; ++j)
    for (unsigned i = 0; i < n; ++i) q.push_back(Int(j));
  return q;
}

Int quotient_degree(unsigned n, unsigned k) {
  return boost::multiprecision::pow(factorial(k), n);
}

}  // namespace jetchern
