#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace logsurf {

// Every quantity in the engine is an exact rational. No floating point
// exists anywhere on a verdict path.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rat& q) {
  return is_integer(q) && mpz_even_p(q.get_num().get_mpz_t());
}

// Strict parser for "a" or "a/b" with b > 0 after sign normalisation.
// Decimal points are rejected: rationals never pass through floats.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
  if (digits == 0) throw std::invalid_argument("bad rational literal: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("bad rational literal: " + s);
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++den_digits; }
    if (den_digits == 0 || i != s.size())
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Rat q(s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace logsurf
