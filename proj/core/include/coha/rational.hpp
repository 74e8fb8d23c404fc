#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace coha {

// mpq_class keeps values canonical (reduced, positive denominator) as long as
// every constructor from a raw fraction is followed by canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// Reduced num/den; den must be nonzero.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Always "num/den", e.g. "3/1", "-1/2".
std::string rational_to_string(const Rational& q);

// Accepts "n", "-n" or "n/d" with d != 0.
Rational rational_from_string(const std::string& s);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Every (k_1..k_parts) with k_i >= 0 summing to total, paired with the
// multinomial coefficient total! / prod k_i!. Lexicographic order.
std::vector<std::pair<std::vector<int>, Integer>> weak_compositions(int total, int parts);

}  // namespace coha
