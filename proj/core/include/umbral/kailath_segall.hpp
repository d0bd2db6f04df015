#ifndef UMBRAL_KAILATH_SEGALL_HPP
#define UMBRAL_KAILATH_SEGALL_HPP

#include <umbral/families.hpp>
#include <umbral/poly.hpp>

namespace umbral {

// indeterminate x_j of the Kailath-Segall ring ("x1", "x2", ...)
Variable ks_variable(int j);

// P_n by the alternating recursion
// P_n = (1/n) (P_{n-1} x_1 - P_{n-2} x_2 + ... + (-1)^{n+1} P_0 x_n).
Poly ks_recursive(int n);

// n! P_n as the n-th moment of the partition umbra of the umbra whose i-th
// moment is (-1)^{i-1} (i-1)! x_i; agrees with ks_recursive exactly.
Poly ks_umbral(int n);

// P_n(a x_1, a^2 x_2, ..., a^n x_n) = a^n P_n with a symbolic.
bool ks_homogeneity_check(int n);

// The value substituted for x_i when specializing to a classical family;
// these satisfy kappa_(space part)^i + kappa_(time part)^i =
// (-1)^{i-1} (i-1)! x_i for the family's polynomial umbra.
Poly ks_indeterminate(Family f, int i, const FamilyParams& params = {},
                      const TshVars& vars = {});

// The family polynomial recovered from P_k: Q_k for hermite, the
// Poisson-Charlier polynomial, the Laguerre polynomial L_k^{(t-k)}, the
// actuarial polynomial, and the normalized Meixner polynomial.
Poly ks_specialize(Family f, int k, const FamilyParams& params = {},
                   const TshVars& vars = {});

} // namespace umbral

#endif
