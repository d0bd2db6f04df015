#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <umbral/families.hpp>
#include <umbral/verification.hpp>

using namespace umbral;

namespace {

const TshVars vars;
const Poly x = Poly::var("x");
const Poly t = Poly::var("t");

FamilyParams symbolic_params()
{
  FamilyParams p;
  p.s = Poly::var("s");
  p.lambda = Poly::var("lambda");
  p.p = Poly::var("p");
  p.a = Poly::var("a");
  p.d = Poly::var("d");
  return p;
}

} // namespace

TEST_CASE("catalogue lookups")
{
  CHECK(family_from_name("hermite") == Family::hermite);
  CHECK(family_name(Family::pseudo_narumi) == "pseudo-narumi");
  CHECK_THROWS_AS(family_from_name("legendre"), std::invalid_argument);
  CHECK(all_families().size() == 9);
}

TEST_CASE("reference polynomials at small degree")
{
  CHECK(classical(Family::hermite, 2) == x * x - t);
  CHECK(classical(Family::poisson_charlier, 1) == x - t);
  for (Family f : all_families())
    CHECK(classical(f, 0) == Poly(1L));
  // Bernoulli polynomials B_k(x,1): B_1 = x - 1/2, B_2 = x^2 - x + 1/6
  Poly b1 = classical(Family::bernoulli, 1).substitute(vars.t, Poly(1L));
  CHECK(b1 == x - Poly(Rational(1, 2)));
  Poly b2 = classical(Family::bernoulli, 2).substitute(vars.t, Poly(1L));
  CHECK(b2 == x * x - x + Poly(Rational(1, 6)));
  // Euler polynomials E_k(x) at t = 1: E_1 = x - 1/2, E_2 = x^2 - x
  Poly e1 = classical(Family::euler, 1).substitute(vars.t, Poly(1L));
  CHECK(e1 == x - Poly(Rational(1, 2)));
  Poly e2 = classical(Family::euler, 2).substitute(vars.t, Poly(1L));
  CHECK(e2 == x * x - x);
  // Laguerre: L_1^{(t-1)} = t - x
  CHECK(classical(Family::laguerre, 1) == t - x);
  // actuarial k=1: lambda t - x
  FamilyParams sp = symbolic_params();
  CHECK(classical(Family::actuarial, 1, sp) == sp.lambda * t - x);
  CHECK_THROWS_AS(classical(Family::hermite, -1), std::invalid_argument);
}

TEST_CASE("umbral equals classical under the stated normalization")
{
  FamilyParams sp = symbolic_params();
  for (Family f : all_families())
    for (int k = 0; k <= 8; ++k)
      CHECK(umbral_construction(f, k, sp) ==
            classical(f, k, sp) * normalization(f, k, sp));
}

TEST_CASE("meixner and krawtchouk at numeric p")
{
  for (const char* pv : {"1/2", "1/3", "2/3"}) {
    FamilyParams fp;
    fp.p = Poly(rat_from_string(pv));
    for (int k = 0; k <= 6; ++k) {
      CHECK(umbral_construction(Family::meixner, k, fp) ==
            classical(Family::meixner, k, fp));
      CHECK(umbral_construction(Family::krawtchouk, k, fp) ==
            classical(Family::krawtchouk, k, fp));
    }
  }
  FamilyParams bad;
  bad.p = Poly(Rational(3, 2));
  CHECK_THROWS_AS(umbral_construction(Family::meixner, 2, bad), std::invalid_argument);
  CHECK_THROWS_AS(umbral_construction(Family::krawtchouk, 2, bad), std::invalid_argument);
}

TEST_CASE("meixner normalization against the terminating 2F1 sum")
{
  // (-1)^k (t)-rising_k M_k(x; t, p) with M_k = 2F1(-k, -x; t; 1 - 1/p),
  // checked at numeric t where the hypergeometric denominators are numbers
  for (const Rational& tv : {Rational(2), Rational(7, 2)}) {
    FamilyParams fp; // p = 1/2
    Rational pinv(2);
    Rational svar = Rational(1) - pinv; // 1 - 1/p
    for (int k = 1; k <= 5; ++k) {
      Poly m; // 2F1 as a polynomial in x
      Rational num_k(1), den(1), jfac(1);
      Poly poch_x(1L); // (-x)_j, rising
      for (int j = 0; j <= k; ++j) {
        if (j > 0) {
          num_k *= Rational(-(k - j + 1));            // (-k)_j
          den *= tv + Rational(j - 1);                // (t)_j rising
          jfac *= Rational(j);
          poch_x *= -x + Rational(j - 1);             // (-x)_j rising
        }
        m += poch_x * (num_k / (den * jfac)) * umbral::pow(svar, static_cast<unsigned>(j));
      }
      Rational t_rising(1);
      for (int j = 0; j < k; ++j)
        t_rising *= tv + Rational(j);
      Poly expect = m * (k % 2 == 0 ? t_rising : -t_rising);
      Poly got = umbral_construction(Family::meixner, k, fp).substitute(vars.t, Poly(tv));
      CHECK(got == expect);
    }
  }
}

TEST_CASE("families pass the converse TSH checker")
{
  FamilyParams sp = symbolic_params();
  for (Family f : all_families()) {
    Umbra proc = family_process(f, sp);
    for (int k = 1; k <= 5; ++k)
      CHECK(tsh_check(proc, umbral_construction(f, k, sp), k).ok);
  }
}

TEST_CASE("levy-sheffer polynomials")
{
  // gamma = chi reduces to Q_k
  Umbra alpha0 = random_integer_umbra(91);
  for (int k = 0; k <= 6; ++k)
    CHECK(levy_sheffer(dot(Poly(-1L), alpha0), singleton(), k) ==
          q_poly(alpha0, k).value);
  CHECK(levy_sheffer(alpha0, singleton(), 0) == Poly(1L));
  // the combination identity, random pairs
  for (unsigned seed = 0; seed < 5; ++seed) {
    Umbra a = random_integer_umbra(100 + seed, 0, 2);
    Umbra base = random_integer_umbra(200 + seed, 0, 2);
    Umbra g = disjoint_sum(base, Umbra([base](int i) {
                             return i == 1 ? Poly(1L) - base.moment(1) : Poly();
                           }));
    for (int k = 0; k <= 6; ++k)
      CHECK(levy_sheffer(a, g, k) == levy_sheffer_combination(a, g, k));
  }
  CHECK_THROWS_AS(levy_sheffer(alpha0, augmentation(), 2), std::domain_error);
  // generating-function oracle: sum_k V_k z^k/k! = f(alpha,z)^t exp(x(f(gamma,z)-1))
  {
    const int order = 6;
    Umbra a = random_integer_umbra(301, 0, 2);
    Umbra base = random_integer_umbra(302, 0, 2);
    Umbra g = disjoint_sum(base, Umbra([base](int i) {
                             return i == 1 ? Poly(1L) - base.moment(1) : Poly();
                           }));
    Series fg = g.egf(order);
    fg[0] = Poly();
    Series total = a.egf(order).pow(t) * (fg * x).exp();
    for (int k = 0; k <= order; ++k)
      CHECK(levy_sheffer(a, g, k) == total[k]);
  }
  // generating function route: charlier pair gives the classical polynomials
  FamilyParams sp = symbolic_params();
  auto [ca, cg] = levy_sheffer_pair(Family::poisson_charlier, sp);
  for (int k = 0; k <= 6; ++k)
    CHECK(levy_sheffer(ca, cg, k) == classical(Family::poisson_charlier, k, sp));
  // meixner pair gives the normalized meixner polynomials
  auto [ma, mg] = levy_sheffer_pair(Family::meixner, sp);
  for (int k = 0; k <= 5; ++k)
    CHECK(levy_sheffer(ma, mg, k) == umbral_construction(Family::meixner, k, sp));
}

TEST_CASE("orthogonality")
{
  FamilyParams sp = symbolic_params();
  for (Family f : {Family::hermite, Family::poisson_charlier, Family::laguerre,
                   Family::meixner}) {
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m < n; ++m)
        CHECK(orthogonality_check(f, n, m, sp).is_zero());
    for (int n = 0; n <= 3; ++n)
      CHECK_FALSE(orthogonality_check(f, n, n, sp).is_zero());
  }
  CHECK(orthogonality_check(Family::hermite, 0, 0, sp) == Poly(1L));
  // Hermite diagonal at n = 2, s = 1: 2 t^2
  FamilyParams unit;
  CHECK(orthogonality_check(Family::hermite, 2, 2, unit) == t * t * Rational(2));
  CHECK(orthogonality_check(Family::hermite, 1, 2, unit).is_zero());
  CHECK_THROWS_AS(levy_sheffer_pair(Family::krawtchouk, sp), std::invalid_argument);
}

TEST_CASE("random walk coherence at integer t")
{
  FamilyParams sp = symbolic_params();
  for (Family f : {Family::krawtchouk, Family::pseudo_narumi}) {
    Umbra proc = family_process(f, sp);
    for (long n : {2L, 3L}) {
      Umbra walk = dot(Poly(n), proc);
      Umbra brute = proc;
      for (long j = 1; j < n; ++j)
        brute = add(brute, proc);
      for (int i = 0; i <= 6; ++i)
        CHECK(walk.moment(i) == brute.moment(i));
      for (int k = 0; k <= 5; ++k) {
        // the P_k combination rebuilt with integer time matches t = n
        Poly at_n = umbral_construction(f, k, sp).substitute(vars.t, Poly(n));
        Umbra mseq = *family_m_sequence(f, sp);
        std::vector<Poly> mm(std::max(k, 1));
        for (int i = 1; i <= k; ++i)
          mm[i - 1] = mseq.moment(i);
        Poly acc = (k == 0) ? Poly(1L) : Poly();
        for (int j = 1; j <= k; ++j)
          acc += shifted_dot_moment(x, Poly(-n), proc, j) * partial_bell(k, j, mm);
        CHECK(at_n == acc);
      }
    }
  }
}
