#include <umbral/multivar.hpp>

#include <mutex>
#include <stdexcept>

namespace umbral {

MSeries::MSeries(int dim, int order) : dim_(dim), order_(order)
{
  if (dim < 1)
    throw std::invalid_argument("MSeries: dimension must be >= 1");
  if (order < 1)
    throw std::invalid_argument("MSeries: order must be >= 1");
}

MSeries MSeries::one(int dim, int order)
{
  MSeries s(dim, order);
  s.set(MultiIndex::zero(dim), Poly(1L));
  return s;
}

const Poly& MSeries::at(const MultiIndex& i) const
{
  static const Poly zero;
  auto it = c_.find(i);
  return it == c_.end() ? zero : it->second;
}

void MSeries::set(const MultiIndex& i, Poly c)
{
  if (i.dim() != dim_)
    throw std::invalid_argument("MSeries::set: dimension mismatch");
  if (i.total() > order_)
    return;
  if (c.is_zero())
    c_.erase(i);
  else
    c_[i] = std::move(c);
}

MSeries MSeries::operator+(const MSeries& o) const
{
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("MSeries::+: shape mismatch");
  MSeries r = *this;
  for (const auto& [i, c] : o.c_) {
    Poly sum = r.at(i) + c;
    r.set(i, std::move(sum));
  }
  return r;
}

MSeries MSeries::operator-(const MSeries& o) const
{
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("MSeries::-: shape mismatch");
  MSeries r = *this;
  for (const auto& [i, c] : o.c_) {
    Poly sum = r.at(i) - c;
    r.set(i, std::move(sum));
  }
  return r;
}

MSeries MSeries::operator*(const MSeries& o) const
{
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("MSeries::mul: shape mismatch");
  MSeries r(dim_, order_);
  for (const auto& [ia, ca] : c_)
    for (const auto& [ib, cb] : o.c_) {
      if (ia.total() + ib.total() > order_)
        continue;
      MultiIndex i = ia + ib;
      Poly prod = ca * cb * MultiIndex::binomial(i, ia);
      r.set(i, r.at(i) + prod);
    }
  return r;
}

MSeries MSeries::operator*(const Poly& c) const
{
  MSeries r(dim_, order_);
  for (const auto& [i, ci] : c_)
    r.set(i, ci * c);
  return r;
}

MSeries MSeries::exp() const
{
  if (!at(MultiIndex::zero(dim_)).is_zero())
    throw std::domain_error("MSeries::exp: nonzero constant term");
  MSeries r = one(dim_, order_);
  MSeries power = one(dim_, order_);
  Rational kfac(1);
  for (int k = 1; k <= order_; ++k) {
    power = power * *this;
    kfac *= Rational(k);
    r = r + power * Poly(Rational(1) / kfac);
  }
  return r;
}

MSeries MSeries::log() const
{
  if (!(at(MultiIndex::zero(dim_)) == Poly(1L)))
    throw std::domain_error("MSeries::log: constant term must be 1");
  MSeries h = *this - one(dim_, order_);
  MSeries r(dim_, order_);
  MSeries power = one(dim_, order_);
  for (int k = 1; k <= order_; ++k) {
    power = power * h;
    Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    r = r + power * Poly(c);
  }
  return r;
}

MSeries MSeries::pow(const Poly& e) const
{
  return (log() * e).exp();
}

struct MultiUmbra::State {
  MomentFn fn;
  mutable std::mutex mu;
  mutable std::map<MultiIndex, Poly> cache;
};

MultiUmbra::MultiUmbra(int dim, MomentFn fn, std::string name)
    : dim_(dim), st_(std::make_shared<State>()), name_(std::move(name))
{
  if (dim < 1)
    throw std::invalid_argument("MultiUmbra: dimension must be >= 1");
  st_->fn = std::move(fn);
}

MultiUmbra MultiUmbra::from_moments(int dim, std::map<MultiIndex, Poly> moments,
                                    std::string name)
{
  return MultiUmbra(
      dim,
      [moments = std::move(moments)](const MultiIndex& i) {
        auto it = moments.find(i);
        return it == moments.end() ? Poly() : it->second;
      },
      std::move(name));
}

const Poly& MultiUmbra::moment(const MultiIndex& i) const
{
  if (i.dim() != dim_)
    throw std::invalid_argument("MultiUmbra::moment: dimension mismatch");
  std::lock_guard lock(st_->mu);
  auto it = st_->cache.find(i);
  if (it == st_->cache.end())
    it = st_->cache.emplace(i, i.is_zero() ? Poly(1L) : st_->fn(i)).first;
  return it->second;
}

MSeries MultiUmbra::egf(int order) const
{
  MSeries f = MSeries::one(dim_, order);
  for (const auto& i : multi_indices_up_to(dim_, order))
    f.set(i, moment(i));
  return f;
}

Umbra MultiUmbra::marginal(int j) const
{
  if (j < 0 || j >= dim_)
    throw std::invalid_argument("MultiUmbra::marginal: bad coordinate");
  MultiUmbra self = *this;
  int d = dim_;
  return Umbra([self, d, j](int n) {
    std::vector<int> e(d, 0);
    e[j] = n;
    return self.moment(MultiIndex(std::move(e)));
  });
}

MultiUmbra unity_tuple(int dim)
{
  return MultiUmbra(dim, [](const MultiIndex&) { return Poly(1L); }, "u-tuple");
}

MultiUmbra gaussian_tuple(int dim)
{
  return MultiUmbra(
      dim,
      [](const MultiIndex& i) {
        // f = 1 + z z^T / 2: only pure second powers survive
        if (i.total() != 2)
          return Poly();
        for (int j = 0; j < i.dim(); ++j)
          if (i[j] == 2)
            return Poly(1L);
        return Poly();
      },
      "delta");
}

MultiUmbra correlated_tuple(const Umbra& xi, int dim, std::string name)
{
  return MultiUmbra(
      dim, [xi](const MultiIndex& i) { return xi.moment(i.total()); }, std::move(name));
}

MultiUmbra bernoulli_tuple(int dim)
{
  return correlated_tuple(bernoulli_umbra(), dim, "iota-tuple");
}

MultiUmbra euler_tuple(int dim)
{
  return correlated_tuple(euler_umbra(), dim, "eta-tuple");
}

MultiUmbra special_tuple(std::string_view name, int dim)
{
  if (name == "unity")
    return unity_tuple(dim);
  if (name == "gaussian")
    return gaussian_tuple(dim);
  if (name == "bernoulli")
    return bernoulli_tuple(dim);
  if (name == "euler")
    return euler_tuple(dim);
  throw std::invalid_argument("special_tuple: unknown tuple '" + std::string(name) + "'");
}

MultiUmbra gaussian_covariance_tuple(const std::vector<std::vector<Poly>>& C)
{
  const int d = static_cast<int>(C.size());
  if (d < 1)
    throw std::invalid_argument("gaussian_covariance_tuple: empty matrix");
  for (const auto& row : C)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("gaussian_covariance_tuple: matrix not square");
  // Sigma = C C^T
  std::vector<std::vector<Poly>> sigma(d, std::vector<Poly>(d));
  for (int r = 0; r < d; ++r)
    for (int cc = 0; cc < d; ++cc)
      for (int j = 0; j < d; ++j)
        sigma[r][cc] += C[r][j] * C[cc][j];
  return MultiUmbra(
      d,
      [sigma](const MultiIndex& i) {
        if (i.total() != 2)
          return Poly();
        int first = -1, second = -1;
        for (int j = 0; j < i.dim(); ++j) {
          if (i[j] == 2)
            return sigma[j][j];
          if (i[j] == 1)
            (first < 0 ? first : second) = j;
        }
        return sigma[first][second];
      },
      "deltaC");
}

MultiUmbra add(const MultiUmbra& a, const MultiUmbra& b)
{
  if (a.dim() != b.dim())
    throw std::invalid_argument("add: dimension mismatch");
  return MultiUmbra(a.dim(), [a, b](const MultiIndex& i) {
    Poly acc;
    for (const auto& k : multi_indices_below(i))
      acc += a.moment(k) * b.moment(i - k) * MultiIndex::binomial(i, k);
    return acc;
  });
}

MultiUmbra scale(const Poly& c, const MultiUmbra& a)
{
  return MultiUmbra(a.dim(),
                    [c, a](const MultiIndex& i) { return c.pow(i.total()) * a.moment(i); });
}

MultiUmbra disjoint_sum(const MultiUmbra& a, const MultiUmbra& b)
{
  if (a.dim() != b.dim())
    throw std::invalid_argument("disjoint_sum: dimension mismatch");
  return MultiUmbra(a.dim(),
                    [a, b](const MultiIndex& i) { return a.moment(i) + b.moment(i); });
}

Poly dot_weighted_moment(const std::function<Poly(int)>& weight,
                         const MultiUmbra& mu, const MultiIndex& i)
{
  if (i.is_zero())
    return Poly(1L);
  Poly acc;
  Rational ifac = i.factorial();
  for (const auto& lambda : multi_index_partitions(i)) {
    Poly prod(ifac / (lambda.multiplicity_factorial() * lambda.column_factorial()));
    for (const auto& [col, r] : lambda.columns)
      prod *= mu.moment(col).pow(r);
    acc += prod * weight(lambda.length());
  }
  return acc;
}

MultiUmbra dot(const Poly& e, const MultiUmbra& mu)
{
  return MultiUmbra(mu.dim(), [e, mu](const MultiIndex& i) {
    return dot_weighted_moment([&](int l) { return lower_factorial(l, e); }, mu, i);
  });
}

MultiUmbra cumulants_multi(const MultiUmbra& mu)
{
  return MultiUmbra(mu.dim(), [mu](const MultiIndex& i) {
    return mu.egf(i.total()).log().at(i);
  });
}

MultiUmbra partition_multi(const MultiUmbra& mu)
{
  return MultiUmbra(mu.dim(), [mu](const MultiIndex& i) {
    int n = i.total();
    MSeries f = mu.egf(n);
    f.set(MultiIndex::zero(mu.dim()), Poly());
    return f.exp().at(i);
  });
}

void MultiLevyTriplet::validate() const
{
  const int d = dim();
  if (d < 1)
    throw std::invalid_argument("MultiLevyTriplet: dimension must be >= 1");
  if (!c.empty()) {
    if (static_cast<int>(c.size()) != d)
      throw std::invalid_argument("MultiLevyTriplet: C has wrong dimension");
    for (const auto& row : c)
      if (static_cast<int>(row.size()) != d)
        throw std::invalid_argument("MultiLevyTriplet: C is not square");
  }
  for (const auto& [i, g] : jump_moments) {
    if (i.dim() != d)
      throw std::invalid_argument("MultiLevyTriplet: jump moment dimension mismatch");
    if (i.total() == 0 && !(g == Poly(1L)))
      throw std::invalid_argument("MultiLevyTriplet: jump_moments[0] must be 1");
    if (i.total() == 1 && !g.is_zero())
      throw std::invalid_argument(
          "MultiLevyTriplet: first-order jump moments must vanish (compensated form)");
  }
}

MultiUmbra MultiLevyTriplet::cumulant_tuple() const
{
  validate();
  const int d = dim();
  std::map<MultiIndex, Poly> drift_moments;
  for (int j = 0; j < d; ++j)
    drift_moments[MultiIndex::unit(d, j)] = drift[j];
  MultiUmbra chi_m = MultiUmbra::from_moments(d, std::move(drift_moments), "chi-m");
  std::map<MultiIndex, Poly> jumps = jump_moments;
  jumps.erase(MultiIndex::zero(d));
  MultiUmbra gamma = MultiUmbra::from_moments(d, std::move(jumps), "gamma");
  if (c.empty())
    return disjoint_sum(chi_m, gamma);
  return disjoint_sum(chi_m, disjoint_sum(gaussian_covariance_tuple(c), gamma));
}

MultiUmbra levy_multi(const MultiLevyTriplet& triplet)
{
  return partition_multi(triplet.cumulant_tuple());
}

Variable multi_x(int j)
{
  if (j < 1)
    throw std::invalid_argument("multi_x: index starts at 1");
  return variable("x" + std::to_string(j));
}

namespace {

Poly x_power(const MultiIndex& e)
{
  Poly r(1L);
  for (int j = 0; j < e.dim(); ++j)
    r *= Poly::var(multi_x(j + 1)).pow(e[j]);
  return r;
}

// E[(x + e.mu)^i] with x the coordinate tuple
Poly shifted_dot_moment_multi(const Poly& e, const MultiUmbra& mu, const MultiIndex& i)
{
  MultiUmbra d = dot(e, mu);
  Poly acc;
  for (const auto& l : multi_indices_below(i))
    acc += x_power(l) * d.moment(i - l) * MultiIndex::binomial(i, l);
  return acc;
}

void check_no_capture_multi(const MultiUmbra& mu, const TshVars& vars, int upto,
                            bool with_s = false)
{
  for (const auto& i : multi_indices_up_to(mu.dim(), upto)) {
    const Poly& m = mu.moment(i);
    if (m.depends_on(vars.t) || (with_s && m.depends_on(vars.s)))
      throw std::invalid_argument("multivar: tuple moments mention t or s");
    for (int j = 1; j <= mu.dim(); ++j)
      if (m.depends_on(multi_x(j)))
        throw std::invalid_argument("multivar: tuple moments mention a coordinate variable");
  }
}

} // namespace

Poly q_poly_multi(const MultiUmbra& mu, const MultiIndex& i, const TshVars& vars)
{
  if (i.dim() != mu.dim())
    throw std::invalid_argument("q_poly_multi: dimension mismatch");
  check_no_capture_multi(mu, vars, i.total());
  Poly t = Poly::var(vars.t);
  return shifted_dot_moment_multi(-t, mu, i);
}

CheckResult martingale_check_multi(const MultiUmbra& mu, const MultiIndex& i,
                                   const TshVars& vars)
{
  check_no_capture_multi(mu, vars, i.total(), true);
  Poly t = Poly::var(vars.t);
  Poly s = Poly::var(vars.s);
  MultiUmbra minus_t = dot(-t, mu);
  Poly lhs;
  for (const auto& k : multi_indices_below(i))
    lhs += shifted_dot_moment_multi(t - s, mu, k) * minus_t.moment(i - k) *
           MultiIndex::binomial(i, k);
  Poly rhs = q_poly_multi(mu, i, vars).substitute(vars.t, s);
  if (lhs == rhs)
    return {};
  return {false, lhs, rhs};
}

Poly tsh_from_initial_multi(const MultiUmbra& mu,
                            const std::map<MultiIndex, Poly>& p0,
                            const MultiIndex& v, const TshVars& vars)
{
  check_no_capture_multi(mu, vars, v.total());
  Poly t = Poly::var(vars.t);
  MultiUmbra minus_t = dot(-t, mu);
  Poly acc;
  for (const auto& k : multi_indices_below(v)) {
    Poly pk;
    for (const auto& i : multi_indices_below(v)) {
      if (!k.leq(i))
        continue;
      auto it = p0.find(i);
      if (it == p0.end() || it->second.is_zero())
        continue;
      pk += it->second * minus_t.moment(i - k) * MultiIndex::binomial(i, k);
    }
    acc += pk * x_power(k);
  }
  return acc;
}

CheckResult tsh_check_multi(const MultiUmbra& mu, const Poly& P,
                            const MultiIndex& v, const TshVars& vars)
{
  const int d = mu.dim();
  // split each term into its coordinate part and the rest
  std::map<MultiIndex, Poly> coeffs;
  for (const auto& [mono, c] : P.terms()) {
    std::vector<int> e(d, 0);
    Monomial rest;
    for (const auto& [var, ex] : mono.factors()) {
      bool is_coord = false;
      for (int j = 0; j < d; ++j)
        if (var == multi_x(j + 1)) {
          if (ex < 0)
            throw std::invalid_argument("tsh_check_multi: negative coordinate power");
          e[j] = ex;
          is_coord = true;
          break;
        }
      if (!is_coord)
        rest = rest * Monomial::of(var, ex);
    }
    MultiIndex k{std::move(e)};
    if (!k.leq(v))
      return {false, P, Poly()};
    coeffs[k] += Poly::term(c, rest);
  }
  std::map<MultiIndex, Poly> p0;
  for (const auto& [k, c] : coeffs)
    p0[k] = c.substitute(vars.t, Poly());
  Poly rebuilt = tsh_from_initial_multi(mu, p0, v, vars);
  if (rebuilt == P)
    return {};
  return {false, P, rebuilt};
}

MultiFamily multi_family_from_name(std::string_view name)
{
  if (name == "hermite")
    return MultiFamily::hermite;
  if (name == "bernoulli")
    return MultiFamily::bernoulli;
  if (name == "euler")
    return MultiFamily::euler;
  throw std::invalid_argument("unknown multivariate family '" + std::string(name) + "'");
}

MultiUmbra multi_family_process(MultiFamily f, int dim,
                                const std::vector<std::vector<Poly>>& c_matrix)
{
  switch (f) {
  case MultiFamily::hermite: {
    std::vector<std::vector<Poly>> c = c_matrix;
    if (c.empty()) { // identity
      c.assign(dim, std::vector<Poly>(dim));
      for (int j = 0; j < dim; ++j)
        c[j][j] = Poly(1L);
    }
    return partition_multi(gaussian_covariance_tuple(c));
  }
  case MultiFamily::bernoulli:
    return dot(Poly(-1L), bernoulli_tuple(dim));
  case MultiFamily::euler:
    return scale(Poly(Rational(1, 2)),
                 add(unity_tuple(dim), dot(Poly(-1L), euler_tuple(dim))));
  }
  throw std::logic_error("multi_family_process: unreachable");
}

Poly family_multi(MultiFamily f, const MultiIndex& i,
                  const std::vector<std::vector<Poly>>& c_matrix, const TshVars& vars)
{
  return q_poly_multi(multi_family_process(f, i.dim(), c_matrix), i, vars);
}

Poly levy_sheffer_multi(const MultiUmbra& mu, const MultiUmbra& nu,
                        const MultiIndex& k, const TshVars& vars)
{
  if (mu.dim() != nu.dim() || k.dim() != mu.dim())
    throw std::invalid_argument("levy_sheffer_multi: dimension mismatch");
  for (int j = 0; j < nu.dim(); ++j)
    if (nu.moment(MultiIndex::unit(nu.dim(), j)).is_zero())
      throw std::domain_error(
          "levy_sheffer_multi: nu must have nonzero first-order moments");
  Poly t = Poly::var(vars.t);
  Poly xsum;
  for (int j = 1; j <= mu.dim(); ++j)
    xsum += Poly::var(multi_x(j));
  MultiUmbra t_part = dot(t, mu);
  MultiUmbra x_part = dot(xsum, partition_multi(nu));
  Poly acc;
  for (const auto& j : multi_indices_below(k))
    acc += t_part.moment(j) * x_part.moment(k - j) * MultiIndex::binomial(k, j);
  return acc;
}

} // namespace umbral
