#pragma once

#include <jetchern/rational.hpp>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace jetchern {

// Ordinary partition lambda_1 >= ... >= lambda_rho >= 1 of m = sum(lambda_i).
struct Partition {
  std::vector<unsigned> parts;

  unsigned m() const;
  unsigned rho() const { return static_cast<unsigned>(parts.size()); }
  bool valid() const;
  bool operator==(const Partition&) const = default;
};

// Weighted partition (i_1, ..., i_k) with i_j >= 0 and weight sum j*i_j = m.
// i_j counts the factors of derivative order j.
struct WeightedPartition {
  std::vector<unsigned> i;

  unsigned k() const { return static_cast<unsigned>(i.size()); }
  unsigned m() const;  // the weight
  bool operator==(const WeightedPartition&) const = default;
};

// Shared memo table (m, k) -> value.  Entries are immutable once inserted; a
// lost insertion race recomputes the same value, so callers always observe a
// single consistent result.
class CountTable {
 public:
  template <class F>
  Int get(unsigned m, unsigned k, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = tab_.find({m, k});
      if (it != tab_.end()) return it->second;
    }
    Int v = compute(m, k);
    std::lock_guard<std::mutex> lock(mu_);
    return tab_.emplace(std::make_pair(m, k), std::move(v)).first->second;
  }

 private:
  std::map<std::pair<unsigned, unsigned>, Int> tab_;
  std::mutex mu_;
};

// Partitions of m into exactly k parts (p_0(0) = 1, p_k(m) = 0 for k > m).
Int p_exact_parts(unsigned m, unsigned k);

// All partitions of m: p(m) = sum_k p_k(m).
Int p_total(unsigned m);

// Partitions of m into parts of size at most k: q_k(m) = sum_{j<=k} p_j(m).
// This is the number of weighted partitions (i_1,...,i_k) of weight m.
Int q_weighted_count(unsigned m, unsigned k);

// All weighted partitions of weight m with k slots, in descending
// lexicographic order on (i_1, ..., i_k).
std::vector<WeightedPartition> enumerate_weighted(unsigned m, unsigned k);

// L_k(m) = sum_{j<=k} j * p_j(m): total number of parts over all partitions
// of m into at most k parts.
Int total_length(unsigned m, unsigned k);

// Dimension of the irreducible S_m-representation attached to lambda,
// via the hook-free determinant form d = m! * prod_{i<j}(l_i - l_j) / prod l_i!
// with l_i = lambda_i + rho - i.
Int irrep_dimension(const Partition& lambda);

struct Asymptotics {
  double estimate;  // m^(k-1) / ((k-1)! k!), the leading-order size of p_k(m)
  Int lower;        // C(m-1, k-1)              <= k! * p_k(m)
  Int upper;        // C(m + k(k-1)/2 - 1, k-1) >= k! * p_k(m)
};
Asymptotics asymptotics(unsigned m, unsigned k);

// exp(pi * sqrt(2m/3)) / (4m * sqrt(3)), the classical growth estimate for
// p(m); returned as a double since only the ratio against p(m) is of interest.
double hardy_ramanujan(unsigned m);

Int derangements(unsigned n);
Int surjections(unsigned n, unsigned k);
Int stirling_first(unsigned n, unsigned k);   // unsigned Stirling numbers, 1st kind
Int stirling_second(unsigned n, unsigned k);
Int bell(unsigned n);

// Nearest integer to n^2/12; equals p_exact_parts(n, 3) for n >= 3.
Int p3_nearest(unsigned n);

}  // namespace jetchern
