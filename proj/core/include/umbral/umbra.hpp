#ifndef UMBRAL_UMBRA_HPP
#define UMBRAL_UMBRA_HPP

#include <umbral/combinatorics.hpp>
#include <umbral/poly.hpp>
#include <umbral/series.hpp>

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

// An umbra is identified with its moment sequence a_0 = 1, a_1, a_2, ...
// Moments are produced lazily by an oracle and cached; computing moment n
// never forces moments beyond n. Copies share the cache.
class Umbra {
public:
  using MomentFn = std::function<Poly(int)>;

  Umbra(); // augmentation (all moments beyond a_0 vanish)
  explicit Umbra(MomentFn fn, std::string name = {});

  // finite list a_1, a_2, ..., remaining moments zero
  static Umbra from_moments(std::vector<Poly> tail, std::string name = {});
  // moment n read off a generating function built at order n
  static Umbra from_egf(std::function<Series(int)> egf, std::string name = {});

  const Poly& moment(int n) const;
  // a_0..a_n
  std::vector<Poly> moments(int n) const;
  Series egf(int order) const;
  const std::string& name() const { return name_; }

private:
  struct State;
  std::shared_ptr<State> st_;
  std::string name_;
};

// Table-1/Table-2 catalogue. Both printed Euler normalizations exist under
// distinct names: `euler` has EGF 2 e^z/(e^{2z}+1) (moments are the Euler
// numbers, the normalization that reproduces the Euler polynomials) and
// `euler_mean_one` has EGF 2 e^z/(e^z+1).
Umbra augmentation();   // epsilon
Umbra unity();          // u
Umbra boolean_unity();  // u-bar, moments i!
Umbra singleton();      // chi
Umbra bell_umbra();     // beta, Bell numbers
Umbra bernoulli_umbra();// iota, Bernoulli numbers
Umbra euler_umbra();    // Euler numbers, EGF 2 e^z/(e^{2z}+1)
Umbra euler_mean_one(); // EGF 2 e^z/(e^z+1)
Umbra gaussian_seed();  // varsigma, EGF 1 + z^2/2
Umbra special(std::string_view name); // by name, for the CLI

// sum of uncorrelated umbrae: binomial convolution of moments
Umbra add(const Umbra& a, const Umbra& b);
// moments c^n a_n
Umbra scale(const Poly& c, const Umbra& a);
// dot-product e . alpha for a polynomial e (covers n, t, -t, t-s, ...)
Umbra dot(const Poly& e, const Umbra& a);
// dot-product gamma . alpha for an umbral left factor
Umbra dot(const Umbra& gamma, const Umbra& a);
// -t . alpha
Umbra inverse(const Poly& t, const Umbra& a);
// chi . alpha: moments are the cumulants of alpha
Umbra cumulants(const Umbra& a);
// beta . alpha: moments are complete Bell polynomials of alpha's moments
Umbra partition_umbra(const Umbra& a);
// alpha_D, moments i a_{i-1}
Umbra derivative_umbra(const Umbra& a);
// alpha +. gamma, moments a_i + g_i
Umbra disjoint_sum(const Umbra& a, const Umbra& b);
// composition umbra alpha . beta . gamma
Umbra composition(const Umbra& a, const Umbra& g);
// compositional inverse alpha^{<-1>}; requires an invertible first moment
Umbra comp_inverse(const Umbra& a);

// Moment/cumulant transforms on finite sequences. Moment vectors carry
// m[0] = 1; cumulant-type vectors carry [0] = 0. All exact and triangular.
std::vector<Poly> moments_to_cumulants(std::span<const Poly> m);
std::vector<Poly> cumulants_to_moments(std::span<const Poly> c);
std::vector<Poly> moments_to_boolean_cumulants(std::span<const Poly> m);
std::vector<Poly> boolean_cumulants_to_moments(std::span<const Poly> b);
std::vector<Poly> moments_to_free_cumulants(std::span<const Poly> m);
std::vector<Poly> free_cumulants_to_moments(std::span<const Poly> r);

// Levy triplet in compensated form: the jump umbra eta satisfies
// jump_moments[0] = 1 and jump_moments[1] = 0 (the e^{zx} - 1 - zx
// compensation); drift lands entirely in c0.
struct LevyTriplet {
  Poly drift;                    // c0
  Poly gauss_scale;              // s
  std::vector<Poly> jump_moments; // eta_0 = 1, eta_1 = 0, eta_2, ...

  void validate() const;
  // c0 chi +. s varsigma +. eta: its moments are the cumulants of X_1
  Umbra cumulant_umbra() const;
};

// the umbra alpha with {t . alpha} the Levy process: beta . cumulant_umbra
Umbra levy_umbra(const LevyTriplet& triplet);
// X_{T_t}: composition of the subordinator's Levy umbra with the base
// process's cumulant umbra
Umbra subordinate(const LevyTriplet& time_changer, const LevyTriplet& base);

} // namespace umbral

#endif
