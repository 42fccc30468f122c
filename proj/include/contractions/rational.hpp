#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace contractions {

using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) for integer n (polynomial extension: product formula), k >= 0.
inline Int binomial(const Int& n, unsigned k) {
  Int num = 1;
  Int den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - static_cast<long>(i);
    den *= static_cast<long>(i) + 1;
  }
  return num / den;
}

inline Int binomial(long n, unsigned k) { return binomial(Int(n), k); }

// C(n, k) that is zero for n < k, matching dimension counts of graded pieces.
inline Int binomial_dim(long n, unsigned k) {
  if (n < static_cast<long>(k)) return 0;
  return binomial(Int(n), k);
}

inline long to_long(const Int& v) { return mpz_get_si(v.get_mpz_t()); }

}  // namespace contractions
