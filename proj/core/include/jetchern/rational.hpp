#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jetchern {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);

// C(n, k); zero when k > n.  n is assumed nonnegative everywhere we call this.
Int binomial(const Int& n, unsigned k);

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Throws std::domain_error if r is not integral; used where a formula promises
// an integer and we want the promise enforced, not rounded away.
Int to_int(const Rat& r);

// Canonical rendering: "p" when integral, "p/q" otherwise (q > 0, sign on p).
std::string rat_string(const Rat& r);

}  // namespace jetchern
