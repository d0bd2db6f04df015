#ifndef UMBRAL_FAMILIES_HPP
#define UMBRAL_FAMILIES_HPP

#include <umbral/tsh.hpp>
#include <umbral/umbra.hpp>

#include <optional>
#include <string>

namespace umbral {

enum class Family {
  hermite,
  bernoulli,
  euler,
  poisson_charlier,
  laguerre,
  actuarial,
  meixner,
  krawtchouk,
  pseudo_narumi,
};

Family family_from_name(std::string_view name);
std::string_view family_name(Family f);
// every family, in catalogue order
std::span<const Family> all_families();

// Family parameters. Defaults are the catalogue's reference values; any
// entry may be a symbol (Poly::var) instead of a number where the formulas
// stay Laurent-polynomial. Meixner's Pascal parameter d = p/q is derived
// from p when p is numeric; pass d explicitly to keep it symbolic.
struct FamilyParams {
  Poly s = Poly(1L);                 // Gaussian scale (hermite)
  Poly lambda = Poly(1L);            // rate (poisson-charlier, actuarial)
  Poly p = Poly(Rational(1, 2));     // success probability (meixner, krawtchouk)
  Poly a = Poly(1L);                 // summand count factor (pseudo-narumi)
  std::optional<Poly> d;             // Pascal parameter p/q, overrides p

  Poly pascal_d() const;             // d, or p/(1-p) for numeric p
  Poly p_inverse() const;            // 1/p, or 1 + 1/d when d is given
};

// the per-unit-time umbra alpha: the family's process is {t . alpha}
Umbra family_process(Family f, const FamilyParams& params = {});

// Reference construction: the polynomial extracted from the family's
// classical generating function (Hermite/Bernoulli/Euler/Poisson-Charlier/
// actuarial/Meixner/Krawtchouk/pseudo-Narumi) or, for Laguerre, from the
// textbook binomial sum for L_k^{(t-k)}.
Poly classical(Family f, int k, const FamilyParams& params = {},
               const TshVars& vars = {});

// Umbral construction from the catalogue: Q_k for the Appell rows, the
// Stirling combination for Poisson-Charlier, and
// P_k = sum_j Q_j B_{k,j}(m_1, ...) for the Sheffer rows.
Poly umbral_construction(Family f, int k, const FamilyParams& params = {},
            const TshVars& vars = {});

// factor N with umbral_construction(f,k) == N * classical(f,k)
Poly normalization(Family f, int k, const FamilyParams& params = {});

// the m_i sequence of the P_k rows (empty optional for Appell rows)
std::optional<Umbra> family_m_sequence(Family f, const FamilyParams& params = {});

// V_k(x,t) = E[(x.beta.gamma + t.alpha)^k]
Poly levy_sheffer(const Umbra& alpha, const Umbra& gamma, int k,
                  const TshVars& vars = {});

// V_k via the cumulant route: sum_i E[(x + t.beta.kappa)^i] B_{k,i}(g_1,...)
// with kappa the cumulant umbra of alpha.beta.gamma^{<-1>}
Poly levy_sheffer_combination(const Umbra& alpha, const Umbra& gamma, int k,
                              const TshVars& vars = {});

// the family's Levy-Sheffer pair (alpha, gamma) (orthogonal families only)
std::pair<Umbra, Umbra> levy_sheffer_pair(Family f, const FamilyParams& params = {});

// E[V_n V_m] under the family's own process at time t; zero for n != m
Poly orthogonality_check(Family f, int n, int m, const FamilyParams& params = {},
                         const TshVars& vars = {});

} // namespace umbral

#endif
