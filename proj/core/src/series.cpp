#include <umbral/series.hpp>

#include <stdexcept>

namespace umbral {

namespace {

void check_same_order(const Series& a, const Series& b, const char* op)
{
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": truncation order mismatch");
}

// ordinary coefficients o_k = c_k / k!
std::vector<Poly> to_ordinary(const Series& f)
{
  std::vector<Poly> o(f.order() + 1);
  for (int k = 0; k <= f.order(); ++k)
    o[k] = f[k] * (Rational(1) / factorial(static_cast<unsigned>(k)));
  return o;
}

Series from_ordinary(const std::vector<Poly>& o)
{
  Series f(static_cast<int>(o.size()) - 1);
  for (int k = 0; k < static_cast<int>(o.size()); ++k)
    f[k] = o[k] * factorial(static_cast<unsigned>(k));
  return f;
}

std::vector<Poly> ord_mul(const std::vector<Poly>& a, const std::vector<Poly>& b)
{
  std::vector<Poly> r(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      r[n] += a[k] * b[n - k];
  return r;
}

} // namespace

Series::Series(int order)
{
  if (order < 1)
    throw std::invalid_argument("Series: order must be >= 1");
  c_.assign(order + 1, Poly());
}

Series Series::constant(const Poly& c, int order)
{
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::z(int order)
{
  Series s(order);
  s[1] = Poly(1L);
  return s;
}

Series Series::operator+(const Series& o) const
{
  check_same_order(*this, o, "Series::+");
  Series r(order());
  for (int k = 0; k <= order(); ++k)
    r[k] = c_[k] + o[k];
  return r;
}

Series Series::operator-(const Series& o) const
{
  check_same_order(*this, o, "Series::-");
  Series r(order());
  for (int k = 0; k <= order(); ++k)
    r[k] = c_[k] - o[k];
  return r;
}

Series Series::operator-() const
{
  Series r(order());
  for (int k = 0; k <= order(); ++k)
    r[k] = -c_[k];
  return r;
}

Series Series::operator*(const Series& o) const
{
  check_same_order(*this, o, "Series::mul");
  Series r(order());
  for (int n = 0; n <= order(); ++n)
    for (int k = 0; k <= n; ++k)
      r[n] += c_[k] * o[n - k] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  return r;
}

Series Series::operator*(const Poly& c) const
{
  Series r(order());
  for (int k = 0; k <= order(); ++k)
    r[k] = c_[k] * c;
  return r;
}

Series Series::exp() const
{
  if (!c_[0].is_zero())
    throw std::domain_error("Series::exp: nonzero constant term");
  // g' = f' g, i.e. g_{n+1} = sum_k C(n,k) f_{k+1} g_{n-k}
  Series g(order());
  g[0] = Poly(1L);
  for (int n = 0; n < order(); ++n) {
    Poly acc;
    for (int k = 0; k <= n; ++k)
      acc += c_[k + 1] * g[n - k] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    g[n + 1] = acc;
  }
  return g;
}

Series Series::log() const
{
  if (!(c_[0] == Poly(1L)))
    throw std::domain_error("Series::log: constant term must be 1");
  // f' = g' f  =>  g_{n+1} = f_{n+1} - sum_{k<n} C(n,k) g_{k+1} f_{n-k}
  Series g(order());
  for (int n = 0; n < order(); ++n) {
    Poly acc = c_[n + 1];
    for (int k = 0; k < n; ++k)
      acc -= g[k + 1] * c_[n - k] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    g[n + 1] = acc;
  }
  return g;
}

Series Series::pow(const Poly& e) const
{
  return (log() * e).exp();
}

Series Series::ipow(int e) const
{
  if (e < 0)
    throw std::invalid_argument("Series::ipow: negative exponent");
  Series r = one(order());
  Series base = *this;
  while (e > 0) {
    if (e & 1)
      r = r * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return r;
}

Series Series::compose_shifted(const Series& g) const
{
  if (!(g[0] == Poly(1L)))
    throw std::domain_error("Series::compose_shifted: inner constant term must be 1");
  auto f = to_ordinary(*this);
  auto h = to_ordinary(g);
  h[0] = Poly(); // g - 1
  // Horner: r = f_N; r = r*h + f_{N-1}; ...
  std::vector<Poly> r(order() + 1);
  for (int k = order(); k >= 0; --k) {
    r = ord_mul(r, h);
    r[0] += f[k];
  }
  return from_ordinary(r);
}

Series Series::divide(const Series& o) const
{
  check_same_order(*this, o, "Series::divide");
  auto a = to_ordinary(*this);
  auto b = to_ordinary(o);
  if (!b[0].is_term())
    throw std::domain_error("Series::divide: divisor constant term not invertible");
  Poly inv0 = b[0].inverse();
  std::vector<Poly> q(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Poly acc = a[n];
    for (std::size_t j = 0; j < n; ++j)
      acc -= q[j] * b[n - j];
    q[n] = acc * inv0;
  }
  return from_ordinary(q);
}

Series Series::dilate(const Poly& c) const
{
  Series r(order());
  for (int k = 0; k <= order(); ++k)
    r[k] = c_[k] * c.pow(k);
  return r;
}

Series Series::derivative() const
{
  Series r(order());
  for (int k = 0; k < order(); ++k)
    r[k] = c_[k + 1];
  return r;
}

Series Series::revert() const
{
  if (!(c_[0] == Poly(1L)))
    throw std::domain_error("Series::revert: constant term must be 1");
  if (c_[1].is_zero())
    throw std::domain_error("Series::revert: first moment vanishes");
  if (!c_[1].is_term())
    throw std::domain_error("Series::revert: first moment not invertible");
  const int n = order();
  Series big_f = *this;
  big_f[0] = Poly(); // F = f - 1
  Series fprime = big_f.derivative();

  // Newton iteration on F(H) = z; quadratic convergence, so a handful of
  // passes at full order reaches the fixed point.
  Series h(n);
  h[1] = c_[1].inverse(); // H = z / f_1
  int rounds = 2;
  for (int m = 1; m < n; m *= 2)
    ++rounds;
  for (int it = 0; it < rounds; ++it) {
    Series inner = h;
    inner[0] = Poly(1L); // 1 + H for the shifted composition
    Series num = big_f.compose_shifted(inner) - Series::z(n);
    if (num == Series(n))
      break;
    Series den = fprime.compose_shifted(inner);
    h = h - num.divide(den);
  }
  Series result = h;
  result[0] = Poly(1L);
  return result;
}

Series series_from_moments(std::span<const Poly> moments, int order)
{
  Series f(order);
  f[0] = Poly(1L);
  for (int k = 1; k <= order && k < static_cast<int>(moments.size()); ++k)
    f[k] = moments[k];
  return f;
}

} // namespace umbral
