#include <jetchern/combinatorics.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jetchern {

unsigned Partition::m() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

bool Partition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
  }
  return true;
}

unsigned WeightedPartition::m() const {
  unsigned s = 0;
  for (unsigned j = 0; j < i.size(); ++j) s += (j + 1) * i[j];
  return s;
}

Int p_exact_parts(unsigned m, unsigned k) {
  static CountTable memo;
  if (k == 0) return m == 0 ? 1 : 0;
  if (k > m) return 0;
  if (k == m || k == 1) return 1;
  return memo.get(m, k, [](unsigned mm, unsigned kk) {
    // p_k(m) = p_{k-1}(m-1) + p_k(m-k): split on whether a part equals 1
    return p_exact_parts(mm - 1, kk - 1) + p_exact_parts(mm - kk, kk);
  });
}

Int p_total(unsigned m) {
  Int s = 0;
  for (unsigned k = 0; k <= m; ++k) s += p_exact_parts(m, k);
  return s;
}

Int q_weighted_count(unsigned m, unsigned k) {
  Int s = 0;
  for (unsigned j = 0; j <= std::min(m, k); ++j) s += p_exact_parts(m, j);
  return s;
}

namespace {

void enumerate_rec(unsigned slot, unsigned k, unsigned rem,
                   std::vector<unsigned>& cur, std::vector<WeightedPartition>& out) {
  if (slot > k) {
    if (rem == 0) out.push_back(WeightedPartition{cur});
    return;
  }
  // descending lex: try the largest i_slot first
  for (unsigned v = rem / slot + 1; v-- > 0;) {
    cur[slot - 1] = v;
    enumerate_rec(slot + 1, k, rem - v * slot, cur, out);
  }
  cur[slot - 1] = 0;
}

}  // namespace

std::vector<WeightedPartition> enumerate_weighted(unsigned m, unsigned k) {
  std::vector<WeightedPartition> out;
  std::vector<unsigned> cur(k, 0);
  enumerate_rec(1, k, m, cur, out);
  return out;
}

Int total_length(unsigned m, unsigned k) {
  Int s = 0;
  for (unsigned j = 1; j <= std::min(m, k); ++j) s += Int(j) * p_exact_parts(m, j);
  return s;
}

Int irrep_dimension(const Partition& lambda) {
  if (!lambda.valid()) throw std::domain_error("irrep_dimension: not a partition");
  const unsigned rho = lambda.rho();
  const unsigned m = lambda.m();
  if (rho == 0) return 1;
  // l_i = lambda_i + rho - i (1-based i); d = m! * prod_{i<j} (l_i - l_j) / prod l_i!
  std::vector<long long> l(rho);
  for (unsigned i = 0; i < rho; ++i)
    l[i] = static_cast<long long>(lambda.parts[i]) + rho - (i + 1);
  Int numr = factorial(m);
  for (unsigned i = 0; i < rho; ++i)
    for (unsigned j = i + 1; j < rho; ++j) numr *= Int(l[i] - l[j]);
  Int denr = 1;
  for (unsigned i = 0; i < rho; ++i) denr *= factorial(static_cast<unsigned>(l[i]));
  Rat d(numr, denr);
  return to_int(d);
}

Asymptotics asymptotics(unsigned m, unsigned k) {
  if (k == 0) throw std::domain_error("asymptotics: k must be positive");
  Asymptotics a;
  a.estimate = std::pow(static_cast<double>(m), static_cast<double>(k - 1)) /
               (factorial(k - 1).convert_to<double>() * factorial(k).convert_to<double>());
  a.lower = binomial(Int(m) - 1, k - 1);
  a.upper = binomial(Int(m) + Int(k) * (Int(k) - 1) / 2 - 1, k - 1);
  return a;
}

double hardy_ramanujan(unsigned m) {
  if (m == 0) throw std::domain_error("hardy_ramanujan: m must be positive");
  const double pi = 3.14159265358979323846;
  return std::exp(pi * std::sqrt(2.0 * m / 3.0)) / (4.0 * m * std::sqrt(3.0));
}

Int derangements(unsigned n) {
  // d_n = n*d_{n-1} + (-1)^n
  Int d = 1;
  for (unsigned i = 1; i <= n; ++i) d = Int(i) * d + (i % 2 == 0 ? 1 : -1);
  return d;
}

Int surjections(unsigned n, unsigned k) {
  Int s = 0;
  for (unsigned i = 0; i <= k; ++i) {
    Int t = binomial(Int(k), i) * boost::multiprecision::pow(Int(k - i), n);
    s += (i % 2 == 0) ? t : -t;
  }
  return s;
}

Int stirling_first(unsigned n, unsigned k) {
  static CountTable memo;
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0 || k > n) return 0;
  return memo.get(n, k, [](unsigned nn, unsigned kk) {
    return stirling_first(nn - 1, kk - 1) + Int(nn - 1) * stirling_first(nn - 1, kk);
  });
}

Int stirling_second(unsigned n, unsigned k) {
  static CountTable memo;
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0 || k > n) return 0;
  return memo.get(n, k, [](unsigned nn, unsigned kk) {
    return stirling_second(nn - 1, kk - 1) + Int(kk) * stirling_second(nn - 1, kk);
  });
}

Int bell(unsigned n) {
  Int s = 0;
  for (unsigned k = 0; k <= n; ++k) s += stirling_second(n, k);
  return s;
}

Int p3_nearest(unsigned n) {
  return (Int(n) * n + 6) / 12;
}

}  // namespace jetchern
