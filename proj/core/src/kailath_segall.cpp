#include <umbral/kailath_segall.hpp>

#include <umbral/umbra.hpp>

#include <stdexcept>
#include <string>

namespace umbral {

Variable ks_variable(int j)
{
  if (j < 1)
    throw std::invalid_argument("ks_variable: index starts at 1");
  return variable("x" + std::to_string(j));
}

Poly ks_recursive(int n)
{
  if (n < 0)
    throw std::invalid_argument("ks_recursive: negative degree");
  std::vector<Poly> p(n + 1);
  p[0] = Poly(1L);
  for (int m = 1; m <= n; ++m) {
    Poly acc;
    for (int j = 1; j <= m; ++j) {
      Poly term = p[m - j] * Poly::var(ks_variable(j));
      acc += (j % 2 == 1) ? term : -term;
    }
    p[m] = acc * Rational(1, m);
  }
  return p[n];
}

Poly ks_umbral(int n)
{
  if (n < 0)
    throw std::invalid_argument("ks_umbral: negative degree");
  if (n == 0)
    return Poly(1L);
  // (chi.chi)p has moments (-1)^{i-1} (i-1)! x_i
  Umbra seed([](int i) {
    Rational c = factorial(static_cast<unsigned>(i - 1));
    return Poly::var(ks_variable(i)) * ((i % 2 == 1) ? c : -c);
  });
  return partition_umbra(seed).moment(n) *
         (Rational(1) / factorial(static_cast<unsigned>(n)));
}

bool ks_homogeneity_check(int n)
{
  Poly p = ks_recursive(n);
  Poly a = Poly::var("a");
  Poly lhs = p;
  for (int j = 1; j <= n; ++j)
    lhs = lhs.substitute(ks_variable(j), a.pow(j) * Poly::var(ks_variable(j)));
  return lhs == a.pow(n) * p;
}

Poly ks_indeterminate(Family f, int i, const FamilyParams& params, const TshVars& vars)
{
  if (i < 1)
    throw std::invalid_argument("ks_indeterminate: index starts at 1");
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  switch (f) {
  case Family::hermite:
    if (i == 1)
      return x;
    if (i == 2)
      return params.s.pow(2) * t;
    return Poly();
  case Family::poisson_charlier:
    return i == 1 ? x - t * params.lambda : x;
  case Family::laguerre:
    if (i == 1)
      return x - t;
    return (i % 2 == 0) ? t : -t;
  case Family::actuarial:
    // The cumulant relation is driven by the partition-umbra form
    // E[(lambda t - x.beta)^k], whose cumulants are -x at every order; the
    // resulting assignment carries 1/(i-1)!, which the classical EGF oracle
    // confirms (a constant-x assignment reproduces a different family).
    if (i == 1)
      return params.lambda * t - x;
    {
      Poly v = x * (Rational(1) / factorial(static_cast<unsigned>(i - 1)));
      return (i % 2 == 0) ? v : -v;
    }
  case Family::meixner:
    return (params.p_inverse().pow(i) - Poly(1L)) * x - t;
  default:
    throw std::invalid_argument("ks_specialize: unsupported family");
  }
}

Poly ks_specialize(Family f, int k, const FamilyParams& params, const TshVars& vars)
{
  if (k < 0)
    throw std::invalid_argument("ks_specialize: negative degree");
  Poly p = ks_recursive(k);
  for (int j = 1; j <= k; ++j)
    p = p.substitute(ks_variable(j), ks_indeterminate(f, j, params, vars));
  switch (f) {
  case Family::laguerre:
    return (k % 2 == 0) ? p : -p;
  default:
    return p * factorial(static_cast<unsigned>(k));
  }
}

} // namespace umbral
