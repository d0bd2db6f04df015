#include <umbral/simulate.hpp>

#include <umbral/tsh.hpp>

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace umbral {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
  std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(prod >> 32);
  lo = static_cast<std::uint32_t>(prod);
}

} // namespace

Philox::Philox(std::uint64_t seed, std::uint64_t stream)
{
  key_[0] = static_cast<std::uint32_t>(seed);
  key_[1] = static_cast<std::uint32_t>(seed >> 32);
  ctr_[0] = 0;
  ctr_[1] = 0;
  ctr_[2] = static_cast<std::uint32_t>(stream);
  ctr_[3] = static_cast<std::uint32_t>(stream >> 32);
}

void Philox::refill()
{
  std::uint32_t c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
  std::uint32_t k0 = key_[0], k1 = key_[1];
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c0, hi0, lo0);
    mulhilo(kPhiloxM1, c2, hi1, lo1);
    std::uint32_t n0 = hi1 ^ c1 ^ k0;
    std::uint32_t n1 = lo1;
    std::uint32_t n2 = hi0 ^ c3 ^ k1;
    std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  out_[0] = c0;
  out_[1] = c1;
  out_[2] = c2;
  out_[3] = c3;
  avail_ = 4;
  if (++ctr_[0] == 0)
    ++ctr_[1]; // 64-bit position counter in words 0..1
}

std::uint32_t Philox::next_u32()
{
  if (avail_ == 0)
    refill();
  return out_[4 - avail_--];
}

std::uint64_t Philox::next_u64()
{
  std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double Philox::next_double()
{
  // 53 uniform bits mapped into (0,1); never returns 0
  std::uint64_t bits = next_u64() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Philox::normal()
{
  if (spare_normal_) {
    double v = *spare_normal_;
    spare_normal_.reset();
    return v;
  }
  double u1 = next_double();
  double u2 = next_double();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_normal_ = r * std::sin(theta);
  return r * std::cos(theta);
}

double Philox::exponential(double rate)
{
  return -std::log(next_double()) / rate;
}

double Philox::uniform(double a, double b)
{
  return a + (b - a) * next_double();
}

long Philox::poisson(double mean)
{
  if (mean < 0)
    throw std::invalid_argument("poisson: negative mean");
  if (mean == 0)
    return 0;
  if (mean > 50) // keep the multiplication chain short
    return poisson(mean / 2) + poisson(mean / 2);
  double limit = std::exp(-mean);
  long k = 0;
  double prod = next_double();
  while (prod > limit) {
    ++k;
    prod *= next_double();
  }
  return k;
}

double Philox::gamma(double shape)
{
  if (shape <= 0)
    throw std::invalid_argument("gamma: shape must be positive");
  if (shape < 1) {
    // boost to shape+1, then scale back
    double g = gamma(shape + 1);
    double u = next_double();
    return g * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0)
      continue;
    v = v * v * v;
    double u = next_double();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2)
      return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
      return d * v;
  }
}

std::vector<Rational> JumpSpec::moments(int k_max) const
{
  std::vector<Rational> m(k_max + 1);
  m[0] = Rational(1);
  switch (kind) {
  case Kind::point:
    for (int k = 1; k <= k_max; ++k)
      m[k] = umbral::pow(a, static_cast<unsigned>(k));
    break;
  case Kind::uniform: {
    if (a == b)
      throw std::invalid_argument("JumpSpec: degenerate uniform interval");
    // (b^{k+1} - a^{k+1}) / ((k+1)(b-a))
    for (int k = 1; k <= k_max; ++k) {
      Rational num = umbral::pow(b, static_cast<unsigned>(k + 1)) -
                     umbral::pow(a, static_cast<unsigned>(k + 1));
      m[k] = num / (Rational(k + 1) * (b - a));
    }
    break;
  }
  case Kind::normal: {
    // mean a, sd b: m_k = sum_j C(k,2j) a^{k-2j} b^{2j} (2j-1)!!
    for (int k = 1; k <= k_max; ++k) {
      Rational acc(0);
      for (int j = 0; 2 * j <= k; ++j) {
        Rational dfac(1);
        for (int r = 2 * j - 1; r >= 1; r -= 2)
          dfac *= Rational(r);
        acc += binomial(static_cast<unsigned>(k), static_cast<unsigned>(2 * j)) *
               umbral::pow(a, static_cast<unsigned>(k - 2 * j)) *
               umbral::pow(b, static_cast<unsigned>(2 * j)) * dfac;
      }
      m[k] = acc;
    }
    break;
  }
  case Kind::exponential: {
    if (!(a > 0))
      throw std::invalid_argument("JumpSpec: exponential rate must be positive");
    for (int k = 1; k <= k_max; ++k)
      m[k] = factorial(static_cast<unsigned>(k)) / umbral::pow(a, static_cast<unsigned>(k));
    break;
  }
  }
  return m;
}

ProcessSpec::Kind ProcessSpec::kind_from_name(std::string_view name)
{
  if (name == "brownian")
    return Kind::brownian;
  if (name == "poisson")
    return Kind::poisson;
  if (name == "gamma")
    return Kind::gamma;
  if (name == "pascal")
    return Kind::pascal;
  if (name == "compound-poisson")
    return Kind::compound_poisson;
  if (name == "multivariate-brownian")
    return Kind::multivariate_brownian;
  throw std::invalid_argument("unknown process '" + std::string(name) + "'");
}

std::string_view ProcessSpec::kind_name(Kind k)
{
  switch (k) {
  case Kind::brownian:
    return "brownian";
  case Kind::poisson:
    return "poisson";
  case Kind::gamma:
    return "gamma";
  case Kind::pascal:
    return "pascal";
  case Kind::compound_poisson:
    return "compound-poisson";
  case Kind::multivariate_brownian:
    return "multivariate-brownian";
  }
  return "?";
}

void ProcessSpec::validate() const
{
  switch (kind) {
  case Kind::brownian:
    if (!(s > 0))
      throw std::invalid_argument("brownian: s must be positive");
    break;
  case Kind::poisson:
  case Kind::gamma:
  case Kind::compound_poisson:
    if (!(lambda > 0))
      throw std::invalid_argument("lambda must be positive");
    break;
  case Kind::pascal:
    if (!(p > 0 && p < 1))
      throw std::invalid_argument("pascal: p must lie in (0,1)");
    break;
  case Kind::multivariate_brownian:
    if (dim < 1)
      throw std::invalid_argument("multivariate-brownian: dim must be >= 1");
    if (!chol.empty()) {
      if (static_cast<int>(chol.size()) != dim)
        throw std::invalid_argument("multivariate-brownian: C has wrong dimension");
      for (const auto& row : chol)
        if (static_cast<int>(row.size()) != dim)
          throw std::invalid_argument("multivariate-brownian: C is not square");
    }
    break;
  }
}

Umbra ProcessSpec::process_umbra() const
{
  validate();
  switch (kind) {
  case Kind::brownian:
    return partition_umbra(scale(Poly(s), gaussian_seed()));
  case Kind::poisson:
    return dot(Poly(lambda), bell_umbra());
  case Kind::gamma:
    // (t lambda) . ubar: the scale parameter multiplies time
    return dot(Poly(lambda), boolean_unity());
  case Kind::pascal: {
    Rational d = p / (Rational(1) - p);
    return dot(boolean_unity(), dot(Poly(d), bell_umbra()));
  }
  case Kind::compound_poisson: {
    auto jm = jump.moments(24);
    std::vector<Poly> tail(jm.size() - 1);
    for (std::size_t k = 1; k < jm.size(); ++k)
      tail[k - 1] = Poly(jm[k]);
    return dot(Poly(lambda),
               partition_umbra(Umbra::from_moments(std::move(tail))));
  }
  case Kind::multivariate_brownian:
    throw std::invalid_argument("process_umbra: use exact_moments for the multivariate kind");
  }
  throw std::logic_error("process_umbra: unreachable");
}

std::vector<Rational> ProcessSpec::exact_moments(const Rational& t, int k_max) const
{
  Umbra xt = dot(Poly(t), process_umbra());
  std::vector<Rational> m(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    m[k] = xt.moment(k).as_rational();
  return m;
}

double ProcessSpec::sample_increment(double dt, Philox& rng) const
{
  if (!(dt > 0))
    throw std::invalid_argument("sample_increment: dt must be positive");
  switch (kind) {
  case Kind::brownian:
    return to_double(s) * std::sqrt(dt) * rng.normal();
  case Kind::poisson:
    return static_cast<double>(rng.poisson(to_double(lambda) * dt));
  case Kind::gamma:
    return rng.gamma(to_double(lambda) * dt);
  case Kind::pascal: {
    // negative binomial via its gamma-Poisson mixture
    double d = to_double(p) / (1.0 - to_double(p));
    double rate = rng.gamma(dt) * d;
    return static_cast<double>(rng.poisson(rate));
  }
  case Kind::compound_poisson: {
    long n = rng.poisson(to_double(lambda) * dt);
    double acc = 0;
    for (long i = 0; i < n; ++i) {
      switch (jump.kind) {
      case JumpSpec::Kind::point:
        acc += to_double(jump.a);
        break;
      case JumpSpec::Kind::uniform:
        acc += rng.uniform(to_double(jump.a), to_double(jump.b));
        break;
      case JumpSpec::Kind::normal:
        acc += to_double(jump.a) + to_double(jump.b) * rng.normal();
        break;
      case JumpSpec::Kind::exponential:
        acc += rng.exponential(to_double(jump.a));
        break;
      }
    }
    return acc;
  }
  case Kind::multivariate_brownian:
    throw std::invalid_argument("sample_increment: multivariate kind is vector-valued");
  }
  throw std::logic_error("sample_increment: unreachable");
}

std::vector<double> ProcessSpec::sample_increment_vec(double dt, Philox& rng) const
{
  if (kind != Kind::multivariate_brownian)
    return {sample_increment(dt, rng)};
  validate();
  std::vector<double> g(dim);
  for (int j = 0; j < dim; ++j)
    g[j] = rng.normal() * std::sqrt(dt);
  if (chol.empty())
    return g;
  std::vector<double> x(dim, 0.0);
  for (int r = 0; r < dim; ++r)
    for (int j = 0; j < dim; ++j)
      x[r] += to_double(chol[r][j]) * g[j];
  return x;
}

bool SimReport::pass() const
{
  for (const auto& row : moments)
    if (!(std::abs(row.z) <= threshold))
      return false;
  for (const auto& row : martingale)
    if (!(std::abs(row.z) <= threshold))
      return false;
  return true;
}

namespace {

// Neumaier compensated accumulator. Chunks are reduced in index order, so
// parallel and sequential runs produce identical bytes.
struct Kahan {
  double sum = 0, comp = 0;
  void add(double v)
  {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

constexpr long kChunk = 1 << 16;

// Runs one task per chunk on a few worker threads; results are handed back
// as a vector indexed by chunk so the caller reduces in a fixed order.
template <typename T, typename Fn>
std::vector<T> map_chunks(long total, Fn&& fn)
{
  const long n_chunks = (total + kChunk - 1) / kChunk;
  std::vector<T> results(n_chunks);
  unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                        static_cast<unsigned>(n_chunks));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
      long begin = c * kChunk;
      long count = std::min(kChunk, total - begin);
      results[c] = fn(static_cast<std::uint64_t>(c), count);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(worker);
  worker();
  for (auto& th : pool)
    th.join();
  return results;
}

} // namespace

SimReport empirical_moments(const ProcessSpec& spec, const Rational& t, int k_max,
                            long n_samples, std::uint64_t seed)
{
  spec.validate();
  if (n_samples < 1)
    throw std::invalid_argument("empirical_moments: need at least one sample");
  if (k_max < 0)
    throw std::invalid_argument("empirical_moments: negative degree");
  SimReport rep;
  rep.process = std::string(ProcessSpec::kind_name(spec.kind));
  rep.seed = seed;
  rep.n_samples = n_samples;
  rep.t = to_double(t);

  double td = to_double(t);
  struct Partial {
    std::vector<double> pow, pow2;
  };
  auto partials = map_chunks<Partial>(n_samples, [&](std::uint64_t chunk, long count) {
    Philox rng(seed, chunk);
    std::vector<Kahan> pow(k_max + 1), pow2(k_max + 1);
    for (long i = 0; i < count; ++i) {
      double x = spec.sample_increment(td, rng);
      double xp = 1.0;
      for (int k = 0; k <= k_max; ++k) {
        pow[k].add(xp);
        pow2[k].add(xp * xp);
        xp *= x;
      }
    }
    Partial p;
    for (int k = 0; k <= k_max; ++k) {
      p.pow.push_back(pow[k].value());
      p.pow2.push_back(pow2[k].value());
    }
    return p;
  });
  std::vector<Kahan> pow_sum(k_max + 1), pow2_sum(k_max + 1);
  for (const auto& p : partials)
    for (int k = 0; k <= k_max; ++k) {
      pow_sum[k].add(p.pow[k]);
      pow2_sum[k].add(p.pow2[k]);
    }

  auto exact = spec.exact_moments(t, k_max);
  for (int k = 0; k <= k_max; ++k) {
    MomentRow row;
    row.k = k;
    row.exact = exact[k];
    double mean = pow_sum[k].value() / static_cast<double>(n_samples);
    double mean2 = pow2_sum[k].value() / static_cast<double>(n_samples);
    double var = std::max(0.0, mean2 - mean * mean);
    row.empirical = mean;
    row.std_error = std::sqrt(var / static_cast<double>(n_samples));
    double diff = mean - to_double(exact[k]);
    row.z = (row.std_error == 0.0) ? (diff == 0.0 ? 0.0 : INFINITY)
                                   : diff / row.std_error;
    rep.moments.push_back(row);
  }
  return rep;
}

SimReport martingale_mc(const ProcessSpec& spec, int k_max, const Rational& time_s,
                        const Rational& t, long n_outer, long n_inner,
                        std::uint64_t seed)
{
  spec.validate();
  if (!(time_s > 0) || !(t > time_s))
    throw std::invalid_argument("martingale_mc: need 0 < s < t");
  if (n_outer < 2 || n_inner < 1)
    throw std::invalid_argument("martingale_mc: need n_outer >= 2, n_inner >= 1");
  SimReport rep;
  rep.process = std::string(ProcessSpec::kind_name(spec.kind));
  rep.seed = seed;
  rep.n_samples = n_outer * n_inner;
  rep.t = to_double(t);
  rep.time_s = to_double(time_s);

  // dense x-coefficients of Q_k at the two times, evaluated exactly first
  Umbra alpha = spec.process_umbra();
  TshVars vars;
  std::map<Variable, Rational> at_t{{vars.t, t}};
  std::map<Variable, Rational> at_s{{vars.t, time_s}};
  std::vector<std::vector<double>> coeff_t(k_max + 1), coeff_s(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    Poly q = q_poly(alpha, k, vars).value;
    coeff_t[k].assign(k + 1, 0.0);
    coeff_s[k].assign(k + 1, 0.0);
    for (const auto& [power, c] : q.collect(vars.x)) {
      coeff_t[k][power] = to_double(c.eval(at_t));
      coeff_s[k][power] = to_double(c.eval(at_s));
    }
  }
  auto eval_poly = [](const std::vector<double>& c, double x) {
    double acc = 0;
    for (std::size_t j = c.size(); j-- > 0;)
      acc = acc * x + c[j];
    return acc;
  };

  double sd = to_double(time_s);
  double dt = to_double(t) - sd;
  struct Partial {
    std::vector<double> res, res2;
  };
  auto partials = map_chunks<Partial>(n_outer, [&](std::uint64_t chunk, long count) {
    Philox rng(seed, chunk);
    std::vector<Kahan> res(k_max + 1), res2(k_max + 1);
    for (long i = 0; i < count; ++i) {
      double xs = spec.sample_increment(sd, rng);
      std::vector<Kahan> inner(k_max + 1);
      for (long j = 0; j < n_inner; ++j) {
        double xt = xs + spec.sample_increment(dt, rng);
        for (int k = 0; k <= k_max; ++k)
          inner[k].add(eval_poly(coeff_t[k], xt));
      }
      for (int k = 0; k <= k_max; ++k) {
        double r = inner[k].value() / static_cast<double>(n_inner) -
                   eval_poly(coeff_s[k], xs);
        res[k].add(r);
        res2[k].add(r * r);
      }
    }
    Partial p;
    for (int k = 0; k <= k_max; ++k) {
      p.res.push_back(res[k].value());
      p.res2.push_back(res2[k].value());
    }
    return p;
  });
  std::vector<Kahan> res_sum(k_max + 1), res2_sum(k_max + 1);
  for (const auto& p : partials)
    for (int k = 0; k <= k_max; ++k) {
      res_sum[k].add(p.res[k]);
      res2_sum[k].add(p.res2[k]);
    }

  for (int k = 0; k <= k_max; ++k) {
    MartingaleRow row;
    row.k = k;
    double mean = res_sum[k].value() / static_cast<double>(n_outer);
    double mean2 = res2_sum[k].value() / static_cast<double>(n_outer);
    double var = std::max(0.0, mean2 - mean * mean);
    row.mean_residual = mean;
    row.std_error = std::sqrt(var / static_cast<double>(n_outer));
    row.z = (row.std_error == 0.0) ? (mean == 0.0 ? 0.0 : INFINITY)
                                   : mean / row.std_error;
    rep.martingale.push_back(row);
  }
  return rep;
}

} // namespace umbral
