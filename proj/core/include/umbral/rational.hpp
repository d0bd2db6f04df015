#ifndef UMBRAL_RATIONAL_HPP
#define UMBRAL_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace umbral {

// Exact scalars. Rational is the ground field of every computation in the
// library; nothing downstream ever touches floating point except the
// Monte-Carlo corroboration layer.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
  if (den == 0)
    throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or "-p/q"; always canonicalized to lowest terms.
inline Rational rat_from_string(const std::string& s)
{
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Lowest terms; denominator omitted when it is 1.
inline std::string to_string(const Rational& q)
{
  return q.get_str();
}

inline double to_double(const Rational& q)
{
  return q.get_d();
}

inline Integer factorial_int(unsigned n)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Rational factorial(unsigned n)
{
  return Rational(factorial_int(n));
}

inline Integer binomial_int(unsigned n, unsigned k)
{
  if (k > n)
    return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational binomial(unsigned n, unsigned k)
{
  return Rational(binomial_int(n, k));
}

inline Rational pow(const Rational& q, unsigned e)
{
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

} // namespace umbral

#endif
