#ifndef UMBRAL_SIMULATE_HPP
#define UMBRAL_SIMULATE_HPP

#include <umbral/rational.hpp>
#include <umbral/umbra.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

// Counter-based generator (Philox 4x32-10): the stream is a pure function of
// (seed, stream, counter), so chunked or parallel sampling is reproducible
// bit for bit.
class Philox {
public:
  Philox(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  double next_double();        // uniform in (0,1), 53-bit
  double normal();             // Box-Muller
  double exponential(double rate);
  double uniform(double a, double b);
  long poisson(double mean);
  double gamma(double shape);  // scale 1

private:
  void refill();
  std::uint32_t key_[2];
  std::uint32_t ctr_[4];
  std::uint32_t out_[4];
  int avail_ = 0;
  std::optional<double> spare_normal_;
};

struct JumpSpec {
  enum class Kind { point, uniform, normal, exponential };
  Kind kind = Kind::point;
  Rational a = Rational(1); // point value / lower bound / mean / rate
  Rational b = Rational(0); // upper bound / standard deviation

  // exact raw moments of a single jump, k = 0..k_max
  std::vector<Rational> moments(int k_max) const;
};

struct ProcessSpec {
  enum class Kind {
    brownian,
    poisson,
    gamma,
    pascal,
    compound_poisson,
    multivariate_brownian,
  };
  Kind kind = Kind::brownian;
  Rational s = Rational(1);      // brownian scale
  Rational lambda = Rational(1); // poisson/gamma rate, compound-poisson intensity
  Rational p = Rational(1, 2);   // pascal success probability
  JumpSpec jump;                 // compound poisson jumps
  int dim = 1;                   // multivariate brownian
  std::vector<std::vector<Rational>> chol; // C with Sigma = C C^T (optional)

  static ProcessSpec::Kind kind_from_name(std::string_view name);
  static std::string_view kind_name(Kind k);
  void validate() const;

  // the umbra alpha with E[X_t^k] = E[(t.alpha)^k] (univariate kinds)
  Umbra process_umbra() const;
  // exact moments of X_t for rational t
  std::vector<Rational> exact_moments(const Rational& t, int k_max) const;
  // one increment over dt > 0
  double sample_increment(double dt, Philox& rng) const;
  std::vector<double> sample_increment_vec(double dt, Philox& rng) const;
};

struct MomentRow {
  int k = 0;
  Rational exact;
  double empirical = 0, std_error = 0, z = 0;
};

struct MartingaleRow {
  int k = 0;
  double mean_residual = 0, std_error = 0, z = 0;
};

struct SimReport {
  std::string process;
  std::uint64_t seed = 0;
  long n_samples = 0;
  double t = 0, time_s = 0;
  double threshold = 5.0;
  std::vector<MomentRow> moments;
  std::vector<MartingaleRow> martingale;

  bool pass() const;
};

SimReport empirical_moments(const ProcessSpec& spec, const Rational& t, int k_max,
                            long n_samples, std::uint64_t seed);

// For outer samples of X_s, compare the inner average of Q_k(X_s + dX, t)
// with Q_k(X_s, s); residual mean should vanish within Monte-Carlo error.
SimReport martingale_mc(const ProcessSpec& spec, int k_max, const Rational& time_s,
                        const Rational& t, long n_outer, long n_inner,
                        std::uint64_t seed);

} // namespace umbral

#endif
