#pragma once

#include <jetchern/rational.hpp>

#include <vector>

namespace jetchern {

// Weight tuple Q = (q_0, ..., q_r), all entries positive.
using WeightTuple = std::vector<Int>;

// Divide the tuple by the gcd of all entries.
WeightTuple reduce(const WeightTuple& q);

// Well-formed model of the same space: with d_i = gcd of the entries other
// than q_i and a_i = lcm of the d_j for j != i, the normalization is
// (reduce of) (q_i / a_i).  Idempotent; removes the cyclic-quotient
// redundancy (e.g. (2,3,6), (4,6,12) and (6,10,15) all normalize to (1,1,1)).
WeightTuple normalize(const WeightTuple& q);

// Least common multiple of the weights.
Int m_Q(const WeightTuple& q);

// Very-ampleness bound
//   m(Q) = -|Q| + (1/r) * sum_{nu=2}^{r+1} [ sum_{|J|=nu} lcm(q_j : j in J) ]
//                                          / C(r-1, nu-2)
// with |Q| = sum q_i and r+1 = tuple length.  Rational in general.
Rat very_ample_bound(const WeightTuple& q);

// How l_Q^k interprets the gcd in prod(q_j)/gcd over a (k+1)-subset J
// with largest index i_k:
//   subtuple -- gcd of the weights in J (the reading consistent with k = r);
//   prefix   -- gcd of the whole prefix q_0..q_{i_k}, as printed.
// The two disagree on some tuples; both are kept so the published values can
// be audited against either reading.
enum class GcdMode { subtuple, prefix };

// l_Q^k = lcm over all (k+1)-subsets J of prod_{j in J} q_j / gcd(J).
Int l_Qk(const WeightTuple& q, unsigned k, GcdMode mode = GcdMode::subtuple);

// Number of monomials of weighted degree m: dim H^0(P(Q), O(m)).  Zero for
// negative m.
Int section_count(const WeightTuple& q, const Int& m);

struct CohomologyDims {
  Int h0;    // S(p)
  Int mids;  // intermediate groups: always 0
  Int hr;    // S(-p - |Q|) by duality
  Int chi;   // h0 - (-1)^r-signed alternation = h0 + (-1)^r * hr for r >= 1
};

// Cohomology of O(p) on P(Q), r = len(Q) - 1.
CohomologyDims cohomology_dims(const WeightTuple& q, const Int& p);

// Whether O(m) is a genuine line bundle on P(Q): m must be divisible by m_Q.
bool locally_free(const WeightTuple& q, const Int& m);

// The weight tuple of the order-k osculating quotient model for C^n curves:
// (1,...,1, 2,...,2, ..., k,...,k), each repeated n times.
WeightTuple pnk_tuple(unsigned n, unsigned k);

// Degree (k!)^n of that quotient model over the straight projective space.
Int quotient_degree(unsigned n, unsigned k);

}  // namespace jetchern
