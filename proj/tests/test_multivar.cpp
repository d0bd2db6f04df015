#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <umbral/multivar.hpp>
#include <umbral/verification.hpp>

using namespace umbral;

namespace {

const TshVars vars;
const Poly t = Poly::var("t");

MultiUmbra symbolic_tuple(int dim, const std::string& prefix)
{
  return MultiUmbra(dim, [prefix](const MultiIndex& i) {
    std::string name = prefix;
    for (int j = 0; j < i.dim(); ++j)
      name += "_" + std::to_string(i[j]);
    return Poly::var(name);
  });
}

} // namespace

TEST_CASE("mseries arithmetic")
{
  const int d = 2, n = 4;
  // e^{z1+z2}: every coefficient 1
  MSeries e = unity_tuple(d).egf(n);
  MSeries sq = e * e;
  for (const auto& i : multi_indices_up_to(d, n))
    CHECK(sq.at(i) == Poly(umbral::pow(Rational(2), static_cast<unsigned>(i.total()))));
  // log(exp(F)) = F
  MSeries f(d, n);
  f.set(MultiIndex{{1, 0}}, Poly(2L));
  f.set(MultiIndex{{0, 1}}, Poly(-1L));
  f.set(MultiIndex{{1, 1}}, Poly::var("g"));
  CHECK(f.exp().log() == f);
  CHECK_THROWS_AS(e.exp(), std::domain_error);
  CHECK_THROWS_AS(f.log(), std::domain_error);
}

TEST_CASE("special tuples")
{
  MultiUmbra delta = gaussian_tuple(2);
  CHECK(delta.moment(MultiIndex{{1, 1}}).is_zero());
  CHECK(delta.moment(MultiIndex{{2, 0}}) == Poly(1L));
  CHECK(delta.moment(MultiIndex{{0, 0}}) == Poly(1L));
  CHECK(delta.moment(MultiIndex{{2, 1}}).is_zero());

  MultiUmbra u = unity_tuple(3);
  CHECK(u.moment(MultiIndex{{1, 2, 0}}) == Poly(1L));

  // iota-tuple marginal is the univariate Bernoulli umbra
  Umbra marginal = bernoulli_tuple(2).marginal(0);
  for (int n = 0; n <= 8; ++n)
    CHECK(marginal.moment(n) == bernoulli_umbra().moment(n));

  // fully correlated: joint moment depends only on |i|
  CHECK(bernoulli_tuple(2).moment(MultiIndex{{1, 1}}) ==
        bernoulli_umbra().moment(2));
  CHECK(euler_tuple(2).moment(MultiIndex{{2, 2}}) == euler_umbra().moment(4));
  CHECK_THROWS_AS(special_tuple("nope", 2), std::invalid_argument);
}

TEST_CASE("dot product via multi-index partitions")
{
  MultiUmbra mu = symbolic_tuple(2, "g");
  Poly n = Poly::var("n");
  // i = (1,1): n g11 + n(n-1) g10 g01
  Poly g11 = mu.moment(MultiIndex{{1, 1}});
  Poly g10 = mu.moment(MultiIndex{{1, 0}});
  Poly g01 = mu.moment(MultiIndex{{0, 1}});
  CHECK(dot(n, mu).moment(MultiIndex{{1, 1}}) ==
        n * g11 + n * (n - Poly(1L)) * g10 * g01);
  // unit vector: e * g_{e_j}
  CHECK(dot(n, mu).moment(MultiIndex{{0, 1}}) == n * g01);
  // n = 2 brute force: E[(mu' + mu'')^i]
  MultiUmbra brute = add(mu, mu);
  for (const auto& i : multi_indices_up_to(2, 4))
    CHECK(dot(Poly(2L), mu).moment(i) == brute.moment(i));
  // n = 3
  MultiUmbra brute3 = add(add(mu, mu), mu);
  for (const auto& i : multi_indices_up_to(2, 3))
    CHECK(dot(Poly(3L), mu).moment(i) == brute3.moment(i));
}

TEST_CASE("dot degeneration to the univariate engine")
{
  Umbra alpha = random_integer_umbra(61);
  MultiUmbra mu(1, [alpha](const MultiIndex& i) { return alpha.moment(i[0]); });
  Umbra uni = dot(t, alpha);
  MultiUmbra multi = dot(t, mu);
  for (int n = 0; n <= 8; ++n)
    CHECK(multi.moment(MultiIndex{{n}}) == uni.moment(n));
}

TEST_CASE("cumulant transforms")
{
  // product moments: mixed cumulants vanish
  Umbra a1 = random_integer_umbra(71);
  Umbra a2 = random_integer_umbra(73);
  MultiUmbra prod(2, [a1, a2](const MultiIndex& i) {
    return a1.moment(i[0]) * a2.moment(i[1]);
  });
  MultiUmbra k = cumulants_multi(prod);
  for (const auto& i : multi_indices_up_to(2, 6))
    if (i[0] > 0 && i[1] > 0)
      CHECK(k.moment(i).is_zero());
  // marginals carry the univariate cumulants
  for (int n = 1; n <= 6; ++n) {
    MultiIndex i{{n, 0}};
    CHECK(k.moment(i) == cumulants(a1).moment(n));
  }
  // round trip
  MultiUmbra mu = symbolic_tuple(2, "h");
  MultiUmbra rt = partition_multi(cumulants_multi(mu));
  for (const auto& i : multi_indices_up_to(2, 5))
    CHECK(rt.moment(i) == mu.moment(i));
  MultiUmbra rt2 = cumulants_multi(partition_multi(mu));
  for (const auto& i : multi_indices_up_to(2, 5))
    CHECK(rt2.moment(i) == mu.moment(i));
}

TEST_CASE("levy constructor")
{
  std::vector<std::vector<Poly>> c = {{Poly(1L), Poly()}, {Poly(Rational(1, 2)), Poly(1L)}};
  // Sigma = C C^T = [[1, 1/2], [1/2, 5/4]]
  MultiLevyTriplet trip{{Poly(2L), Poly()}, c, {}};
  MultiUmbra levy = levy_multi(trip);
  MultiUmbra k = cumulants_multi(levy);
  CHECK(k.moment(MultiIndex{{1, 0}}) == Poly(2L));
  CHECK(k.moment(MultiIndex{{0, 1}}).is_zero());
  CHECK(k.moment(MultiIndex{{2, 0}}) == Poly(1L));
  CHECK(k.moment(MultiIndex{{1, 1}}) == Poly(Rational(1, 2)));
  CHECK(k.moment(MultiIndex{{0, 2}}) == Poly(Rational(5, 4)));
  for (const auto& i : multi_indices_up_to(2, 4))
    if (i.total() >= 3)
      CHECK(k.moment(i).is_zero());

  // d = 1 reduces to the univariate Levy umbra
  MultiLevyTriplet uni_trip{{Poly(3L)}, {{Poly(2L)}}, {}};
  LevyTriplet uni{Poly(3L), Poly(2L), {}};
  MultiUmbra m1 = levy_multi(uni_trip);
  Umbra u1 = levy_umbra(uni);
  for (int n = 0; n <= 8; ++n)
    CHECK(m1.moment(MultiIndex{{n}}) == u1.moment(n));

  MultiLevyTriplet bad{{Poly(1L), Poly(1L)}, {{Poly(1L)}}, {}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  MultiLevyTriplet bad_jump{{Poly(1L), Poly(1L)},
                            {},
                            {{MultiIndex{{1, 0}}, Poly(2L)}}};
  CHECK_THROWS_AS(bad_jump.validate(), std::invalid_argument);
}

TEST_CASE("multivariate TSH basis")
{
  MultiUmbra mu = symbolic_tuple(2, "g");
  // unit index: x_j - t g_{e_j}
  Poly q = q_poly_multi(mu, MultiIndex{{0, 1}}, vars);
  CHECK(q == Poly::var("x2") - t * mu.moment(MultiIndex{{0, 1}}));
  CHECK(q_poly_multi(mu, MultiIndex{{0, 0}}, vars) == Poly(1L));
  // Brownian d=2, identity covariance: Q_{(2,0)} = x1^2 - t
  MultiUmbra bm = multi_family_process(MultiFamily::hermite, 2);
  CHECK(q_poly_multi(bm, MultiIndex{{2, 0}}, vars) ==
        Poly::var("x1").pow(2) - t);
  CHECK(family_multi(MultiFamily::hermite, MultiIndex{{1, 1}}) ==
        Poly::var("x1") * Poly::var("x2"));
  // Q(x, 0) = x^i
  for (const auto& i : multi_indices_up_to(2, 4)) {
    Poly xi(1L);
    for (int j = 0; j < 2; ++j)
      xi *= Poly::var(multi_x(j + 1)).pow(i[j]);
    CHECK(q_poly_multi(mu, i, vars).substitute(vars.t, Poly()) == xi);
  }
}

TEST_CASE("multivariate martingale identity")
{
  MultiUmbra mu = symbolic_tuple(2, "g");
  CHECK(martingale_check_multi(mu, MultiIndex{{0, 0}}, vars).ok);
  for (const auto& i : multi_indices_up_to(2, 4))
    CHECK(martingale_check_multi(mu, i, vars).ok);
  // gaussian with a nontrivial covariance
  std::vector<std::vector<Poly>> c = {{Poly(1L), Poly()}, {Poly(1L), Poly(2L)}};
  MultiUmbra bm = multi_family_process(MultiFamily::hermite, 2, c);
  for (const auto& i : multi_indices_up_to(2, 4))
    CHECK(martingale_check_multi(bm, i, vars).ok);
}

TEST_CASE("multivariate coefficient characterization")
{
  MultiUmbra mu = symbolic_tuple(2, "g");
  MultiIndex v{{2, 1}};
  std::map<MultiIndex, Poly> p0;
  p0[v] = Poly(1L);
  CHECK(tsh_from_initial_multi(mu, p0, v, vars) == q_poly_multi(mu, v, vars));
  CHECK(tsh_from_initial_multi(mu, {}, v, vars).is_zero());
  CHECK(tsh_check_multi(mu, Poly(), v, vars).ok);
  Poly combo = q_poly_multi(mu, v, vars) -
               q_poly_multi(mu, MultiIndex{{1, 1}}, vars) * Rational(4);
  CHECK(tsh_check_multi(mu, combo, v, vars).ok);
  CHECK_FALSE(tsh_check_multi(mu, combo + t, v, vars).ok);

  // Table-9 Bernoulli family passes for |i| <= 3
  MultiUmbra bern = multi_family_process(MultiFamily::bernoulli, 2);
  for (const auto& i : multi_indices_up_to(2, 3))
    CHECK(tsh_check_multi(bern, q_poly_multi(bern, i, vars), i, vars).ok);
}

TEST_CASE("table 8/9 processes degenerate to the univariate families")
{
  // bernoulli d=1 marginal versus the univariate bernoulli family process
  MultiUmbra bern = multi_family_process(MultiFamily::bernoulli, 1);
  Umbra uni = dot(Poly(-1L), bernoulli_umbra());
  for (int n = 0; n <= 8; ++n)
    CHECK(bern.moment(MultiIndex{{n}}) == uni.moment(n));
  MultiUmbra eul = multi_family_process(MultiFamily::euler, 1);
  Umbra uni_e = scale(Poly(Rational(1, 2)), add(unity(), dot(Poly(-1L), euler_umbra())));
  for (int n = 0; n <= 8; ++n)
    CHECK(eul.moment(MultiIndex{{n}}) == uni_e.moment(n));
}

TEST_CASE("multivariate levy-sheffer polynomials")
{
  MultiUmbra mu = symbolic_tuple(2, "g");
  MultiUmbra nu(2, [](const MultiIndex& i) {
    if (i.total() == 1)
      return Poly(1L);
    return Poly(static_cast<long>(i.total()));
  });
  CHECK(levy_sheffer_multi(mu, nu, MultiIndex{{0, 0}}, vars) == Poly(1L));
  // generating-function oracle
  const int order = 3;
  Poly xsum = Poly::var("x1") + Poly::var("x2");
  MSeries f = mu.egf(order).pow(t);
  MSeries h = nu.egf(order);
  h.set(MultiIndex::zero(2), Poly());
  MSeries total = f * (h * xsum).exp();
  for (const auto& k : multi_indices_up_to(2, order))
    CHECK(levy_sheffer_multi(mu, nu, k, vars) == total.at(k));
  // derivative condition enforced
  MultiUmbra bad(2, [](const MultiIndex& i) {
    return i.total() == 1 ? Poly() : Poly(1L);
  });
  CHECK_THROWS_AS(levy_sheffer_multi(mu, bad, MultiIndex{{1, 0}}, vars),
                  std::domain_error);
}
