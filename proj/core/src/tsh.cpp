#include <umbral/tsh.hpp>

#include <stdexcept>

namespace umbral {

namespace {

// with_s: the check also reserves the conditioning-time variable (martingale
// and Sheffer identities); plain constructions only reserve x and t
void check_no_capture(const Umbra& alpha, const TshVars& vars, int upto, bool with_s = false)
{
  for (int n = 1; n <= upto; ++n) {
    const Poly& m = alpha.moment(n);
    if (m.depends_on(vars.x) || m.depends_on(vars.t) ||
        (with_s && m.depends_on(vars.s)))
      throw std::invalid_argument(
          "tsh: umbra moments mention a reserved indeterminate (x/t/s); "
          "rename the parameter or pass different TshVars");
  }
}

} // namespace

Poly shifted_dot_moment(const Poly& x, const Poly& e, const Umbra& alpha, int n)
{
  Umbra d = dot(e, alpha);
  Poly acc;
  for (int l = 0; l <= n; ++l)
    acc += x.pow(l) * d.moment(n - l) *
           binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
  return acc;
}

TshPoly q_poly(const Umbra& alpha, int k, const TshVars& vars)
{
  if (k < 0)
    throw std::invalid_argument("q_poly: negative degree");
  check_no_capture(alpha, vars, k);
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  return TshPoly{k, shifted_dot_moment(x, -t, alpha, k)};
}

TshPoly q_coeffs_direct(const Umbra& alpha, int k, const TshVars& vars)
{
  if (k < 0)
    throw std::invalid_argument("q_coeffs_direct: negative degree");
  check_no_capture(alpha, vars, k);
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  // c^{(k)}_{ij} = C(k,j) sum_{lambda |- k-j} d_lambda (-1)^i s[l(lambda), i]
  //               a_1^{r_1} a_2^{r_2} ...
  // The factor printed as (-1)^{2 l(lambda) + i} equals (-1)^i; the numerator
  // of d_lambda is the factorial of the partitioned integer k - j.
  Poly acc = x.pow(k); // j = k: empty partition sum contributes 1
  for (int j = 0; j < k; ++j) {
    Poly cj;
    for (const auto& lambda : partitions(k - j)) {
      Poly prod(set_partition_count(lambda));
      for (int part : lambda.parts)
        prod *= alpha.moment(part);
      int l = lambda.length();
      Poly tpart;
      for (int i = 0; i <= l; ++i) {
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        tpart += t.pow(i) * (sign * stirling_first(l, i));
      }
      cj += prod * tpart;
    }
    acc += x.pow(j) * cj * binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
  }
  return TshPoly{k, acc};
}

TshPoly complete_bell_form(const Umbra& alpha, int k, const TshVars& vars)
{
  if (k < 0)
    throw std::invalid_argument("complete_bell_form: negative degree");
  check_no_capture(alpha, vars, k);
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  Umbra kappa = cumulants(dot(-t, alpha));
  std::vector<Poly> args(std::max(k, 1));
  for (int i = 1; i <= k; ++i)
    args[i - 1] = kappa.moment(i);
  if (k >= 1)
    args[0] += x;
  return TshPoly{k, complete_bell(k, args)};
}

CheckResult martingale_check(const Umbra& alpha, int k, const TshVars& vars)
{
  check_no_capture(alpha, vars, k, true);
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  Poly s = Poly::var(vars.s);
  Umbra minus_t = dot(-t, alpha);
  Poly lhs;
  for (int j = 0; j <= k; ++j)
    lhs += shifted_dot_moment(x, t - s, alpha, j) * minus_t.moment(k - j) *
           binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
  Poly rhs = q_poly(alpha, k, vars).value.substitute(vars.t, s);
  if (lhs == rhs)
    return {};
  return {false, lhs, rhs};
}

bool wald_check(const Umbra& alpha, int k, const TshVars& vars)
{
  check_no_capture(alpha, vars, k);
  Poly t = Poly::var(vars.t);
  Umbra plus = dot(t, alpha);
  Umbra minus = dot(-t, alpha);
  Poly acc;
  for (int j = 0; j <= k; ++j)
    acc += plus.moment(j) * minus.moment(k - j) *
           binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
  return acc == (k == 0 ? Poly(1L) : Poly());
}

bool appell_check(const Umbra& alpha, int k, const TshVars& vars)
{
  if (k < 1)
    throw std::invalid_argument("appell_check: k must be >= 1");
  Poly lhs = q_poly(alpha, k, vars).value.derivative(vars.x);
  Poly rhs = q_poly(alpha, k - 1, vars).value * Rational(k);
  return lhs == rhs;
}

CheckResult sheffer_check(const Umbra& alpha, int k, const TshVars& vars)
{
  check_no_capture(alpha, vars, k, true);
  Poly t = Poly::var(vars.t);
  Poly s = Poly::var(vars.s);
  Poly lhs = q_poly(alpha, k, vars).value.substitute(vars.t, t + s);
  Poly rhs;
  for (int j = 0; j <= k; ++j) {
    Poly pj = q_poly(alpha, j, vars).value.substitute(vars.x, Poly())
                  .substitute(vars.t, s);
    rhs += pj * q_poly(alpha, k - j, vars).value *
           binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
  }
  if (lhs == rhs)
    return {};
  return {false, lhs, rhs};
}

Poly tsh_from_initial(const Umbra& alpha, std::span<const Poly> p0,
                      const TshVars& vars)
{
  check_no_capture(alpha, vars, static_cast<int>(p0.size()));
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  const int k = static_cast<int>(p0.size()) - 1;
  Umbra minus_t = dot(-t, alpha);
  Poly acc;
  for (int j = 0; j <= k; ++j) {
    Poly pj;
    for (int i = j; i <= k; ++i)
      pj += p0[i] * minus_t.moment(i - j) *
            binomial(static_cast<unsigned>(i), static_cast<unsigned>(j));
    acc += pj * x.pow(j);
  }
  return acc;
}

CheckResult tsh_check(const Umbra& alpha, const Poly& P, int k, const TshVars& vars)
{
  // read off p_i(0) and rebuild; P is TSH iff the rebuild reproduces it
  std::vector<Poly> p0(k + 1);
  auto coeffs = P.collect(vars.x);
  for (const auto& [power, c] : coeffs) {
    if (power < 0 || power > k)
      return {false, P, Poly()};
    p0[power] = c.substitute(vars.t, Poly());
  }
  Poly rebuilt = tsh_from_initial(alpha, p0, vars);
  if (rebuilt == P)
    return {};
  return {false, P, rebuilt};
}

} // namespace umbral
