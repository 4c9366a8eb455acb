#include <jetchern/rational.hpp>

#include <stdexcept>

namespace jetchern {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(const Int& n, unsigned k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (Int(k) > n) return 0;
  // multiplicative form keeps intermediates integral
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - (i - 1);
    r /= i;
  }
  return r;
}

Int to_int(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("to_int: " + rat_string(r) + " is not integral");
  return num(r);
}

std::string rat_string(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace jetchern
