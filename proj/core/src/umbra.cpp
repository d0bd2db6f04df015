#include <umbral/umbra.hpp>

#include <deque>
#include <stdexcept>

namespace umbral {

struct Umbra::State {
  MomentFn fn;
  mutable std::mutex mu;
  // deque: growth never invalidates references handed out by moment()
  mutable std::deque<std::optional<Poly>> cache;
};

Umbra::Umbra() : Umbra([](int) { return Poly(); }, "epsilon") {}

Umbra::Umbra(MomentFn fn, std::string name)
    : st_(std::make_shared<State>()), name_(std::move(name))
{
  st_->fn = std::move(fn);
}

Umbra Umbra::from_moments(std::vector<Poly> tail, std::string name)
{
  return Umbra(
      [tail = std::move(tail)](int n) {
        return n - 1 < static_cast<int>(tail.size()) ? tail[n - 1] : Poly();
      },
      std::move(name));
}

Umbra Umbra::from_egf(std::function<Series(int)> egf, std::string name)
{
  return Umbra([egf = std::move(egf)](int n) { return egf(n)[n]; }, std::move(name));
}

const Poly& Umbra::moment(int n) const
{
  if (n < 0)
    throw std::invalid_argument("Umbra::moment: negative index");
  std::lock_guard lock(st_->mu);
  if (static_cast<int>(st_->cache.size()) <= n)
    st_->cache.resize(n + 1);
  auto& slot = st_->cache[n];
  if (!slot)
    slot = n == 0 ? Poly(1L) : st_->fn(n);
  return *slot;
}

std::vector<Poly> Umbra::moments(int n) const
{
  std::vector<Poly> out(n + 1);
  for (int k = 0; k <= n; ++k)
    out[k] = moment(k);
  return out;
}

Series Umbra::egf(int order) const
{
  auto m = moments(order);
  return series_from_moments(m, order);
}

Umbra augmentation()
{
  return Umbra();
}

Umbra unity()
{
  return Umbra([](int) { return Poly(1L); }, "u");
}

Umbra boolean_unity()
{
  return Umbra([](int n) { return Poly(factorial(static_cast<unsigned>(n))); }, "ubar");
}

Umbra singleton()
{
  return Umbra([](int n) { return n == 1 ? Poly(1L) : Poly(); }, "chi");
}

Umbra bell_umbra()
{
  return Umbra(
      [](int n) {
        std::vector<Poly> ones(n, Poly(1L));
        return complete_bell(n, ones);
      },
      "beta");
}

Umbra bernoulli_umbra()
{
  // z/(e^z - 1) = 1 / ((e^z - 1)/z); (e^z - 1)/z has EGF coefficients 1/(n+1)
  return Umbra::from_egf(
      [](int order) {
        Series denom(order);
        for (int k = 0; k <= order; ++k)
          denom[k] = Poly(Rational(1, k + 1));
        return Series::one(order).divide(denom);
      },
      "iota");
}

Umbra euler_umbra()
{
  // 2 e^z/(e^{2z} + 1) = sech z: divide 2 e^z by e^{2z} + 1
  return Umbra::from_egf(
      [](int order) {
        Series num(order), denom(order);
        for (int k = 0; k <= order; ++k) {
          num[k] = Poly(2L);
          denom[k] = Poly(umbral::pow(Rational(2), static_cast<unsigned>(k)));
        }
        denom[0] = Poly(2L); // e^{2z} + 1 at z^0
        return num.divide(denom);
      },
      "euler");
}

Umbra euler_mean_one()
{
  // 2 e^z/(e^z + 1)
  return Umbra::from_egf(
      [](int order) {
        Series num(order), denom(order);
        for (int k = 0; k <= order; ++k) {
          num[k] = Poly(2L);
          denom[k] = Poly(1L);
        }
        denom[0] = Poly(2L);
        return num.divide(denom);
      },
      "euler1");
}

Umbra gaussian_seed()
{
  return Umbra([](int n) { return n == 2 ? Poly(1L) : Poly(); }, "varsigma");
}

Umbra special(std::string_view name)
{
  if (name == "epsilon")
    return augmentation();
  if (name == "u")
    return unity();
  if (name == "ubar")
    return boolean_unity();
  if (name == "chi")
    return singleton();
  if (name == "beta")
    return bell_umbra();
  if (name == "iota")
    return bernoulli_umbra();
  if (name == "euler")
    return euler_umbra();
  if (name == "euler1")
    return euler_mean_one();
  if (name == "varsigma")
    return gaussian_seed();
  throw std::invalid_argument("special: unknown umbra '" + std::string(name) + "'");
}

Umbra add(const Umbra& a, const Umbra& b)
{
  return Umbra([a, b](int n) {
    Poly acc;
    for (int k = 0; k <= n; ++k)
      acc += a.moment(k) * b.moment(n - k) *
             binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    return acc;
  });
}

Umbra scale(const Poly& c, const Umbra& a)
{
  return Umbra([c, a](int n) { return c.pow(n) * a.moment(n); });
}

namespace {

// sum_{k=1..i} L(k) B_{i,k}(a_1, ..., a_{i-k+1})
Poly dot_with_weights(const std::function<Poly(int)>& weight, const Umbra& a, int i)
{
  if (i == 0)
    return Poly(1L);
  std::vector<Poly> tail(i);
  for (int j = 1; j <= i; ++j)
    tail[j - 1] = a.moment(j);
  Poly acc;
  for (int k = 1; k <= i; ++k)
    acc += weight(k) * partial_bell(i, k, tail);
  return acc;
}

} // namespace

Umbra dot(const Poly& e, const Umbra& a)
{
  return Umbra([e, a](int i) {
    return dot_with_weights([&](int k) { return lower_factorial(k, e); }, a, i);
  });
}

Umbra dot(const Umbra& gamma, const Umbra& a)
{
  return Umbra([gamma, a](int i) {
    return dot_with_weights(
        [&](int k) {
          // E[(gamma)_k] = sum_j s(k,j) g_j
          Poly w;
          for (int j = 1; j <= k; ++j)
            w += gamma.moment(j) * stirling_first(k, j);
          return w;
        },
        a, i);
  });
}

Umbra inverse(const Poly& t, const Umbra& a)
{
  return dot(-t, a);
}

Umbra cumulants(const Umbra& a)
{
  return dot(singleton(), a);
}

Umbra partition_umbra(const Umbra& a)
{
  return Umbra([a](int n) {
    std::vector<Poly> tail(n);
    for (int j = 1; j <= n; ++j)
      tail[j - 1] = a.moment(j);
    return complete_bell(n, tail);
  });
}

Umbra derivative_umbra(const Umbra& a)
{
  return Umbra([a](int n) { return a.moment(n - 1) * Rational(n); });
}

Umbra disjoint_sum(const Umbra& a, const Umbra& b)
{
  return Umbra([a, b](int n) { return a.moment(n) + b.moment(n); });
}

Umbra composition(const Umbra& a, const Umbra& g)
{
  return Umbra([a, g](int i) {
    if (i == 0)
      return Poly(1L);
    std::vector<Poly> tail(i);
    for (int j = 1; j <= i; ++j)
      tail[j - 1] = g.moment(j);
    Poly acc;
    for (int k = 1; k <= i; ++k)
      acc += a.moment(k) * partial_bell(i, k, tail);
    return acc;
  });
}

Umbra comp_inverse(const Umbra& a)
{
  Poly a1 = a.moment(1);
  if (a1.is_zero())
    throw std::domain_error("comp_inverse: first moment vanishes");
  if (!a1.is_term())
    throw std::domain_error("comp_inverse: first moment not invertible");
  return Umbra::from_egf([a](int order) { return a.egf(order).revert(); });
}

std::vector<Poly> moments_to_cumulants(std::span<const Poly> m)
{
  Umbra alpha = Umbra::from_moments(std::vector<Poly>(m.begin() + 1, m.end()));
  Umbra kappa = cumulants(alpha);
  std::vector<Poly> out(m.size());
  for (std::size_t n = 1; n < m.size(); ++n)
    out[n] = kappa.moment(static_cast<int>(n));
  return out;
}

std::vector<Poly> cumulants_to_moments(std::span<const Poly> c)
{
  Umbra kappa = Umbra::from_moments(std::vector<Poly>(c.begin() + 1, c.end()));
  Umbra alpha = partition_umbra(kappa);
  std::vector<Poly> out(c.size());
  out[0] = Poly(1L);
  for (std::size_t n = 1; n < c.size(); ++n)
    out[n] = alpha.moment(static_cast<int>(n));
  return out;
}

std::vector<Poly> moments_to_boolean_cumulants(std::span<const Poly> m)
{
  // M(z) = 1/(1 - B(z)) with ordinary coefficients:
  // b_n = a_n - sum_{k=1}^{n-1} b_k a_{n-k}
  std::vector<Poly> b(m.size());
  for (std::size_t n = 1; n < m.size(); ++n) {
    Poly acc = m[n];
    for (std::size_t k = 1; k < n; ++k)
      acc -= b[k] * m[n - k];
    b[n] = acc;
  }
  return b;
}

std::vector<Poly> boolean_cumulants_to_moments(std::span<const Poly> b)
{
  std::vector<Poly> m(b.size());
  m[0] = Poly(1L);
  for (std::size_t n = 1; n < b.size(); ++n) {
    Poly acc;
    for (std::size_t k = 1; k <= n; ++k)
      acc += b[k] * m[n - k];
    m[n] = acc;
  }
  return m;
}

std::vector<Poly> moments_to_free_cumulants(std::span<const Poly> m)
{
  // M(z) = R(z M(z)): with M^j truncated, a_n = sum_j r_j [z^{n-j}] M^j
  const std::size_t sz = m.size();
  // powers[j][i] = [z^i] M(z)^j
  std::vector<std::vector<Poly>> powers(sz);
  powers[0].assign(sz, Poly());
  powers[0][0] = Poly(1L);
  for (std::size_t j = 1; j < sz; ++j) {
    powers[j].assign(sz, Poly());
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t k = 0; k <= i; ++k)
        powers[j][i] += powers[j - 1][k] * m[i - k];
  }
  std::vector<Poly> r(sz);
  for (std::size_t n = 1; n < sz; ++n) {
    Poly acc = m[n];
    for (std::size_t j = 1; j < n; ++j)
      acc -= r[j] * powers[j][n - j];
    r[n] = acc; // [z^0] M^n = 1
  }
  return r;
}

std::vector<Poly> free_cumulants_to_moments(std::span<const Poly> r)
{
  // rebuild order by order: a_n = sum_{j=1..n} r_j [z^{n-j}] M^j depends only
  // on a_1..a_{n-1}
  const std::size_t sz = r.size();
  std::vector<Poly> m(sz);
  m[0] = Poly(1L);
  for (std::size_t n = 1; n < sz; ++n) {
    std::vector<std::vector<Poly>> powers(n + 1);
    powers[0].assign(n, Poly());
    powers[0][0] = Poly(1L);
    for (std::size_t j = 1; j <= n; ++j) {
      powers[j].assign(n, Poly());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k)
          powers[j][i] += powers[j - 1][k] * m[i - k];
    }
    Poly acc;
    for (std::size_t j = 1; j <= n; ++j)
      acc += r[j] * powers[j][n - j];
    m[n] = acc;
  }
  return m;
}

void LevyTriplet::validate() const
{
  if (!jump_moments.empty()) {
    if (!(jump_moments[0] == Poly(1L)))
      throw std::invalid_argument("LevyTriplet: jump_moments[0] must be 1");
    if (jump_moments.size() > 1 && !jump_moments[1].is_zero())
      throw std::invalid_argument("LevyTriplet: jump_moments[1] must vanish (compensated form)");
  }
}

Umbra LevyTriplet::cumulant_umbra() const
{
  validate();
  Umbra eta = jump_moments.empty()
                  ? augmentation()
                  : Umbra::from_moments(
                        std::vector<Poly>(jump_moments.begin() + 1, jump_moments.end()));
  return disjoint_sum(scale(drift, singleton()),
                      disjoint_sum(scale(gauss_scale, gaussian_seed()), eta));
}

Umbra levy_umbra(const LevyTriplet& triplet)
{
  return partition_umbra(triplet.cumulant_umbra());
}

Umbra subordinate(const LevyTriplet& time_changer, const LevyTriplet& base)
{
  if (!time_changer.gauss_scale.is_zero())
    throw std::invalid_argument("subordinate: time changer must have zero Gaussian part");
  return composition(levy_umbra(time_changer), base.cumulant_umbra());
}

} // namespace umbral
