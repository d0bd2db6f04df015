#ifndef UMBRACAL_TEST_ORACLES_HPP
#define UMBRACAL_TEST_ORACLES_HPP

// Independent reference computations used only by tests. Each one takes a
// different route than the library code it checks.

#include <umbral/combinatorics.hpp>
#include <umbral/poly.hpp>
#include <umbral/series.hpp>
#include <umbral/umbra.hpp>

#include <vector>

namespace umbral::oracles {

// B_{n,k} by enumerating set partitions of {1..n} with k blocks directly
// (restricted growth strings), multiplying a_{|block|} over blocks.
inline Poly partial_bell_set_partitions(int n, int k, std::span<const Poly> a)
{
  Poly total;
  std::vector<int> rgs(n, 0);
  // enumerate restricted growth strings
  auto block_product = [&](int nblocks) {
    std::vector<int> sizes(nblocks, 0);
    for (int v : rgs)
      ++sizes[v];
    Poly prod(1L);
    for (int s : sizes)
      prod *= a[s - 1];
    return prod;
  };
  while (true) {
    int nblocks = 0;
    for (int v : rgs)
      nblocks = std::max(nblocks, v + 1);
    if (nblocks == k)
      total += block_product(nblocks);
    // next RGS
    int i = n - 1;
    for (; i >= 1; --i) {
      int maxv = 0;
      for (int j = 0; j < i; ++j)
        maxv = std::max(maxv, rgs[j]);
      if (rgs[i] <= maxv) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j)
          rgs[j] = 0;
        break;
      }
      // else reset handled by the loop
    }
    if (i < 1)
      break;
  }
  return total;
}

// p(n) by the dynamic program over largest allowed part.
inline Integer partition_count_dp(int n)
{
  std::vector<std::vector<Integer>> dp(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  for (int maxp = 0; maxp <= n; ++maxp)
    dp[0][maxp] = 1;
  for (int m = 1; m <= n; ++m)
    for (int maxp = 1; maxp <= n; ++maxp) {
      dp[m][maxp] = dp[m][maxp - 1];
      if (m >= maxp)
        dp[m][maxp] += dp[m - maxp][maxp];
    }
  return dp[n][n];
}

// Lagrange inversion: with f = 1 + sum_{k>=1} c_k z^k/k!, c_1 invertible,
// the reversion h = 1 + sum h_n z^n/n! has ordinary coefficients
// [z^n] (h-1) = (1/n) [w^{n-1}] (w / (f(w)-1))^n.
inline Series revert_lagrange(const Series& f)
{
  const int n = f.order();
  // F(w)/w as a series with invertible constant term
  Series f_over_z(n);
  for (int k = 0; k < n; ++k)
    f_over_z[k] = f[k + 1] * (factorial(static_cast<unsigned>(k)) /
                              factorial(static_cast<unsigned>(k + 1)));
  f_over_z[n] = Poly();
  Series h(n);
  h[0] = Poly(1L);
  for (int m = 1; m <= n; ++m) {
    // (z/F)^m = (F/z)^{-m}: build by dividing one^m times
    Series p = Series::one(n);
    for (int j = 0; j < m; ++j)
      p = p.divide(f_over_z);
    // ordinary coefficient of w^{m-1}
    Poly coeff = p[m - 1] * (Rational(1) / factorial(static_cast<unsigned>(m - 1)));
    h[m] = coeff * (Rational(1, m) * factorial(static_cast<unsigned>(m)));
  }
  return h;
}

// (t)_n expanded by brute-force polynomial multiplication (no Stirling path).
inline Poly falling_factorial_direct(int n, const Poly& t)
{
  Poly r(1L);
  for (int j = 0; j < n; ++j)
    r *= t - Poly(static_cast<long>(j));
  return r;
}

} // namespace umbral::oracles

#endif
