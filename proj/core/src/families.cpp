#include <umbral/families.hpp>

#include <array>
#include <stdexcept>

namespace umbral {

namespace {

const std::array<Family, 9> kAll = {
    Family::hermite,          Family::bernoulli, Family::euler,
    Family::poisson_charlier, Family::laguerre,  Family::actuarial,
    Family::meixner,          Family::krawtchouk, Family::pseudo_narumi,
};

const std::array<std::string_view, 9> kNames = {
    "hermite",   "bernoulli", "euler",      "poisson-charlier", "laguerre",
    "actuarial", "meixner",   "krawtchouk", "pseudo-narumi",
};

void validate_p(const Poly& p)
{
  if (p.is_constant()) {
    Rational v = p.constant();
    if (!(v > 0 && v < 1))
      throw std::invalid_argument("family parameter p must lie in (0,1)");
  } else if (!p.is_term()) {
    throw std::invalid_argument("family parameter p must be invertible");
  }
}

} // namespace

Family family_from_name(std::string_view name)
{
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name)
      return kAll[i];
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
  return kNames[static_cast<std::size_t>(f)];
}

std::span<const Family> all_families()
{
  return kAll;
}

Poly FamilyParams::pascal_d() const
{
  if (d)
    return *d;
  validate_p(p);
  if (!p.is_constant())
    throw std::invalid_argument(
        "symbolic p has no Laurent-polynomial d = p/(1-p); pass d explicitly");
  Rational v = p.constant();
  return Poly(v / (Rational(1) - v));
}

Poly FamilyParams::p_inverse() const
{
  if (d)
    return Poly(1L) + d->inverse();
  validate_p(p);
  return p.inverse();
}

Umbra family_process(Family f, const FamilyParams& params)
{
  switch (f) {
  case Family::hermite:
    return partition_umbra(scale(params.s, gaussian_seed()));
  case Family::bernoulli:
    return dot(Poly(-1L), bernoulli_umbra());
  case Family::euler:
    return scale(Poly(Rational(1, 2)), add(unity(), dot(Poly(-1L), euler_umbra())));
  case Family::poisson_charlier:
    return dot(params.lambda, bell_umbra());
  case Family::laguerre:
    return boolean_unity();
  case Family::actuarial:
    return dot(params.lambda, boolean_unity());
  case Family::meixner:
    return dot(boolean_unity(), dot(params.pascal_d(), bell_umbra()));
  case Family::krawtchouk:
    validate_p(params.p);
    return dot(singleton(), dot(params.p, bell_umbra()));
  case Family::pseudo_narumi:
    return dot(-params.a, bernoulli_umbra());
  }
  throw std::logic_error("family_process: unreachable");
}

std::optional<Umbra> family_m_sequence(Family f, const FamilyParams& params)
{
  switch (f) {
  case Family::krawtchouk:
    return comp_inverse(dot(Poly(-1L), family_process(f, params)));
  case Family::pseudo_narumi:
    return comp_inverse(unity());
  case Family::actuarial:
    return comp_inverse(dot(singleton(), scale(Poly(-1L), singleton())));
  case Family::meixner:
    return dot(singleton(),
               add(dot(Poly(-1L), singleton()), scale(params.p_inverse(), singleton())));
  default:
    return std::nullopt;
  }
}

Poly classical(Family f, int k, const FamilyParams& params, const TshVars& vars)
{
  if (k < 0)
    throw std::invalid_argument("classical: negative degree");
  if (k == 0)
    return Poly(1L);
  const int n = k;
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  auto exp_xz = [&](const Poly& c) { // EGF of e^{cz}
    Series s(n);
    for (int j = 0; j <= n; ++j)
      s[j] = c.pow(j);
    return s;
  };
  switch (f) {
  case Family::hermite: {
    // exp(xz - s^2 t z^2/2)
    Series g(n);
    g[1] = x;
    if (n >= 2)
      g[2] = -params.s.pow(2) * t;
    return g.exp()[k];
  }
  case Family::bernoulli: {
    // (z/(e^z - 1))^t e^{xz}
    Series iota = bernoulli_umbra().egf(n);
    return (iota.pow(t) * exp_xz(x))[k];
  }
  case Family::euler: {
    // (2/(e^z + 1))^t e^{xz}
    Series num(n), den(n);
    num[0] = Poly(2L);
    for (int j = 0; j <= n; ++j)
      den[j] = Poly(1L);
    den[0] = Poly(2L);
    return (num.divide(den).pow(t) * exp_xz(x))[k];
  }
  case Family::poisson_charlier: {
    // e^{-lambda t z} (1+z)^x
    Series one_plus_z = Series::one(n);
    one_plus_z[1] = Poly(1L);
    return (exp_xz(-params.lambda * t) * one_plus_z.pow(x))[k];
  }
  case Family::laguerre: {
    // L_k^{(t-k)}(x) = sum_j (-1)^j binom(t, k-j) x^j / j!
    Poly acc;
    for (int j = 0; j <= k; ++j) {
      Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
      Poly binom_t = lower_factorial(k - j, t) *
                     (Rational(1) / factorial(static_cast<unsigned>(k - j)));
      acc += binom_t * x.pow(j) * (sign / factorial(static_cast<unsigned>(j)));
    }
    return acc;
  }
  case Family::actuarial: {
    // exp(lambda t z + x (1 - e^z))
    Series g(n);
    g[1] = params.lambda * t - x;
    for (int j = 2; j <= n; ++j)
      g[j] = -x;
    return g.exp()[k];
  }
  case Family::meixner: {
    // (1 + z/p)^x (1+z)^{-x-t}
    Series a = Series::one(n);
    a[1] = params.p_inverse();
    Series b = Series::one(n);
    b[1] = Poly(1L);
    return (a.pow(x) * b.pow(-x - t))[k];
  }
  case Family::krawtchouk: {
    // (1 - (q/p) z)^x (1+z)^{t-x}
    validate_p(params.p);
    Series a = Series::one(n);
    a[1] = Poly(1L) - params.p.inverse();
    Series b = Series::one(n);
    b[1] = Poly(1L);
    return (a.pow(x) * b.pow(t - x))[k];
  }
  case Family::pseudo_narumi: {
    // ordinary gf (log(1+z)/z)^{a t} (1+z)^x; N_k is the ordinary coefficient
    Series base(n);
    for (int j = 0; j <= n; ++j) {
      Rational c = factorial(static_cast<unsigned>(j)) / Rational(j + 1);
      base[j] = Poly((j % 2 == 0) ? c : -c);
    }
    Series b = Series::one(n);
    b[1] = Poly(1L);
    Poly egf_coeff = (base.pow(params.a * t) * b.pow(x))[k];
    return egf_coeff * (Rational(1) / factorial(static_cast<unsigned>(k)));
  }
  }
  throw std::logic_error("classical: unreachable");
}

Poly umbral_construction(Family f, int k, const FamilyParams& params, const TshVars& vars)
{
  if (k < 0)
    throw std::invalid_argument("umbral_construction: negative degree");
  if (k == 0)
    return Poly(1L);
  switch (f) {
  case Family::hermite:
  case Family::bernoulli:
  case Family::euler:
  case Family::laguerre:
    return q_poly(family_process(f, params), k, vars).value;
  case Family::poisson_charlier: {
    Umbra proc = family_process(f, params);
    Poly acc;
    for (int j = 1; j <= k; ++j)
      acc += q_poly(proc, j, vars).value * stirling_first(k, j);
    return acc;
  }
  case Family::actuarial:
  case Family::meixner:
  case Family::krawtchouk:
  case Family::pseudo_narumi: {
    Umbra proc = family_process(f, params);
    Umbra mseq = *family_m_sequence(f, params);
    std::vector<Poly> m(k);
    for (int i = 1; i <= k; ++i)
      m[i - 1] = mseq.moment(i);
    Poly acc;
    for (int j = 1; j <= k; ++j)
      acc += q_poly(proc, j, vars).value * partial_bell(k, j, m);
    return acc;
  }
  }
  throw std::logic_error("umbral_construction: unreachable");
}

Poly normalization(Family f, int k, const FamilyParams&)
{
  switch (f) {
  case Family::laguerre: {
    Rational c = factorial(static_cast<unsigned>(k));
    return Poly(k % 2 == 0 ? c : -c);
  }
  case Family::pseudo_narumi:
    return Poly(factorial(static_cast<unsigned>(k)));
  default:
    return Poly(1L);
  }
}

Poly levy_sheffer(const Umbra& alpha, const Umbra& gamma, int k, const TshVars& vars)
{
  if (gamma.moment(1).is_zero())
    throw std::domain_error("levy_sheffer: gamma must have nonzero first moment");
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  Umbra x_part = dot(x, partition_umbra(gamma));
  Umbra t_part = dot(t, alpha);
  Poly acc;
  for (int j = 0; j <= k; ++j)
    acc += x_part.moment(j) * t_part.moment(k - j) *
           binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
  return acc;
}

Poly levy_sheffer_combination(const Umbra& alpha, const Umbra& gamma, int k,
                              const TshVars& vars)
{
  Poly x = Poly::var(vars.x);
  Poly t = Poly::var(vars.t);
  // t.beta.kappa_delta == t.delta for delta = alpha.beta.gamma^{<-1>}
  Umbra delta = composition(alpha, comp_inverse(gamma));
  std::vector<Poly> g(std::max(k, 1));
  for (int i = 1; i <= k; ++i)
    g[i - 1] = gamma.moment(i);
  Poly acc = (k == 0) ? Poly(1L) : Poly();
  for (int i = 1; i <= k; ++i)
    acc += shifted_dot_moment(x, t, delta, i) * partial_bell(k, i, g);
  return acc;
}

std::pair<Umbra, Umbra> levy_sheffer_pair(Family f, const FamilyParams& params)
{
  switch (f) {
  case Family::hermite:
    return {dot(Poly(-1L), family_process(f, params)), singleton()};
  case Family::poisson_charlier:
    return {scale(-params.lambda, unity()), cumulants(singleton())};
  case Family::laguerre:
    // gamma with f(gamma, z) = 1 + z/(z-1): moments -i! for i >= 1
    return {boolean_unity(),
            Umbra([](int i) { return Poly(-factorial(static_cast<unsigned>(i))); })};
  case Family::meixner:
    return {dot(Poly(-1L), singleton()), *family_m_sequence(f, params)};
  default:
    throw std::invalid_argument("levy_sheffer_pair: family has no designated pair");
  }
}

Poly orthogonality_check(Family f, int n, int m, const FamilyParams& params,
                         const TshVars& vars)
{
  auto [alpha, gamma] = levy_sheffer_pair(f, params);
  Poly vn = levy_sheffer(alpha, gamma, n, vars);
  Poly vm = levy_sheffer(alpha, gamma, m, vars);
  Umbra measure = dot(Poly::var(vars.t), family_process(f, params));
  Poly acc;
  for (const auto& [power, coeff] : (vn * vm).collect(vars.x)) {
    if (power < 0)
      throw std::logic_error("orthogonality_check: negative power of x");
    acc += coeff * measure.moment(power);
  }
  return acc;
}

} // namespace umbral
