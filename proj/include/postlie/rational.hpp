#ifndef POSTLIE_RATIONAL_HPP
#define POSTLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace postlie {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator) through arithmetic.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" with decimal integers.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// Prints "p" or "p/q".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

/// Combined numerator/denominator bit size; used for pivot selection.
inline size_t rat_bits(const Rational& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace postlie

#endif
