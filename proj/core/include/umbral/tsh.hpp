#ifndef UMBRAL_TSH_HPP
#define UMBRAL_TSH_HPP

#include <umbral/umbra.hpp>

#include <span>

namespace umbral {

// Space/time indeterminates for TSH computations. The conditioning time is
// configurable so processes whose moments already mention "s" (for example a
// symbolic Gaussian scale) can be checked without a name collision; variable
// capture is an error, never silent.
struct TshVars {
  Variable x = variable("x");
  Variable t = variable("t");
  Variable s = variable("s");
};

// Q_k(x,t): monic of degree k in x, Q_k(x,0) = x^k.
struct TshPoly {
  int degree = 0;
  Poly value;
};

struct CheckResult {
  bool ok = true;
  Poly lhs, rhs; // witnesses, populated on failure
  explicit operator bool() const { return ok; }
};

// Q_k(x,t) = sum_j C(k,j) x^j E[(-t.alpha)^{k-j}] (inverse-moment path)
TshPoly q_poly(const Umbra& alpha, int k, const TshVars& vars = {});

// the same polynomial through the partition/Stirling closed form for the
// coefficients c^{(k)}_{ij}
TshPoly q_coeffs_direct(const Umbra& alpha, int k, const TshVars& vars = {});

// Q_k(x,t) = Y_k(x + h_1, h_2, ..., h_k) with h_i the cumulants of -t.alpha
TshPoly complete_bell_form(const Umbra& alpha, int k, const TshVars& vars = {});

// E[Q_k(t.alpha, t) | s.alpha] = Q_k(s.alpha, s) as an exact identity in
// Q[x,s,t], with x standing for s.alpha
CheckResult martingale_check(const Umbra& alpha, int k, const TshVars& vars = {});

// substituting the moments of t.alpha for the powers of x in Q_k gives
// delta_{k,0}, exactly in Q[t]
bool wald_check(const Umbra& alpha, int k, const TshVars& vars = {});

// d/dx Q_k = k Q_{k-1}
bool appell_check(const Umbra& alpha, int k, const TshVars& vars = {});

// Q_k(x, t+s) = sum_j C(k,j) P_j(s) Q_{k-j}(x,t) with P_j(s) = Q_j(0,s)
CheckResult sheffer_check(const Umbra& alpha, int k, const TshVars& vars = {});

// P(x,t) = sum_j p_j(t) x^j rebuilt from its t = 0 coefficients:
// p_j(t) = sum_{i=j..k} C(i,j) p0[i] E[(-t.alpha)^{i-j}]
Poly tsh_from_initial(const Umbra& alpha, std::span<const Poly> p0,
                      const TshVars& vars = {});

// converse checker: decides whether P (degree k in x) is TSH for {t.alpha}
CheckResult tsh_check(const Umbra& alpha, const Poly& P, int k,
                      const TshVars& vars = {});

// moments of the polynomial umbra x + e.alpha (binomial convolution with a
// dot-product); used by the checks and by the families module
Poly shifted_dot_moment(const Poly& x, const Poly& e, const Umbra& alpha, int n);

} // namespace umbral

#endif
