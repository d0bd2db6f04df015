#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <umbral/kailath_segall.hpp>

using namespace umbral;

namespace {

const TshVars vars;
const Poly x1 = Poly::var("x1");
const Poly x2 = Poly::var("x2");
const Poly x3 = Poly::var("x3");

} // namespace

TEST_CASE("recursion base cases")
{
  CHECK(ks_recursive(0) == Poly(1L));
  CHECK(ks_recursive(1) == x1);
  CHECK(ks_recursive(2) == (x1 * x1 - x2) * Rational(1, 2));
  CHECK(ks_recursive(3) ==
        (x1.pow(3) - x1 * x2 * Rational(3) + x3 * Rational(2)) * Rational(1, 6));
  CHECK_THROWS_AS(ks_recursive(-1), std::invalid_argument);
}

TEST_CASE("umbral route equals the recursion")
{
  CHECK(ks_umbral(0) == Poly(1L));
  CHECK(ks_umbral(2) == (x1 * x1 - x2) * Rational(1, 2));
  for (int n = 0; n <= 10; ++n)
    CHECK(ks_umbral(n) == ks_recursive(n));
}

TEST_CASE("homogeneity")
{
  for (int n = 0; n <= 8; ++n)
    CHECK(ks_homogeneity_check(n));
}

TEST_CASE("weights: total weight n when x_j carries weight j")
{
  // substituting x_j -> a^j x_j multiplies P_n by a^n, so every monomial has
  // weighted degree n; spot-check by reading off monomials of P_4
  Poly p4 = ks_recursive(4);
  for (const auto& [mono, c] : p4.terms()) {
    int w = 0;
    for (const auto& [v, e] : mono.factors())
      for (int j = 1; j <= 4; ++j)
        if (v == ks_variable(j))
          w += j * e;
    CHECK(w == 4);
  }
}

TEST_CASE("specializations match the families module")
{
  FamilyParams sp;
  sp.s = Poly::var("s");
  sp.lambda = Poly::var("lambda");
  sp.d = Poly::var("d");
  for (int k = 0; k <= 6; ++k) {
    CHECK(ks_specialize(Family::hermite, k, sp, vars) ==
          umbral_construction(Family::hermite, k, sp, vars));
    CHECK(ks_specialize(Family::poisson_charlier, k, sp, vars) ==
          classical(Family::poisson_charlier, k, sp, vars));
    CHECK(ks_specialize(Family::laguerre, k, sp, vars) ==
          classical(Family::laguerre, k, sp, vars));
    CHECK(ks_specialize(Family::actuarial, k, sp, vars) ==
          umbral_construction(Family::actuarial, k, sp, vars));
    CHECK(ks_specialize(Family::meixner, k, sp, vars) ==
          umbral_construction(Family::meixner, k, sp, vars));
  }
  CHECK_THROWS_AS(ks_specialize(Family::euler, 2, sp, vars), std::invalid_argument);
}

TEST_CASE("hermite specialization in explicit form")
{
  // 2! P_2(x, s^2 t, 0) = x^2 - s^2 t
  FamilyParams sp;
  sp.s = Poly::var("s");
  Poly expect = Poly::var("x").pow(2) - sp.s.pow(2) * Poly::var("t");
  CHECK(ks_specialize(Family::hermite, 2, sp, vars) == expect);
  // 1! P_1(x - t lambda) = x - t lambda
  FamilyParams lp;
  lp.lambda = Poly::var("lambda");
  CHECK(ks_specialize(Family::poisson_charlier, 1, lp, vars) ==
        Poly::var("x") - Poly::var("t") * lp.lambda);
}

TEST_CASE("indeterminate assignments satisfy the cumulant identity")
{
  // checked symbolically per family in the verification suite; here verify
  // the laguerre display twice (raw and homogeneity-transported versions)
  Poly t = Poly::var("t");
  Poly x = Poly::var("x");
  for (int k = 0; k <= 6; ++k) {
    Poly raw = ks_recursive(k);
    Poly via_raw = raw;
    Poly via_flip = raw;
    for (int j = 1; j <= k; ++j) {
      via_raw = via_raw.substitute(ks_variable(j),
                                   j == 1 ? x - t : (j % 2 == 0 ? t : -t));
      via_flip = via_flip.substitute(ks_variable(j), j == 1 ? t - x : t);
    }
    // P_k(x-t, t, -t, ...) = (-1)^k P_k(t-x, t, t, ...)
    CHECK(via_raw == (k % 2 == 0 ? via_flip : -via_flip));
  }
}
