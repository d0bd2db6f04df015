#include <umbral/verification.hpp>

#include <umbral/families.hpp>
#include <umbral/kailath_segall.hpp>
#include <umbral/multivar.hpp>
#include <umbral/simulate.hpp>
#include <umbral/tsh.hpp>

#include <algorithm>
#include <sstream>

namespace umbral {

Suite suite_from_name(std::string_view name)
{
  if (name == "umbral")
    return Suite::umbral;
  if (name == "tsh")
    return Suite::tsh;
  if (name == "families")
    return Suite::families;
  if (name == "ks")
    return Suite::ks;
  if (name == "multivariate")
    return Suite::multivariate;
  if (name == "all")
    return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s)
{
  switch (s) {
  case Suite::umbral:
    return "umbral";
  case Suite::tsh:
    return "tsh";
  case Suite::families:
    return "families";
  case Suite::ks:
    return "ks";
  case Suite::multivariate:
    return "multivariate";
  case Suite::all:
    return "all";
  }
  return "?";
}

Umbra random_integer_umbra(std::uint64_t seed, long lo, long hi)
{
  return Umbra([seed, lo, hi](int n) {
    Philox rng(seed, static_cast<std::uint64_t>(n));
    long span = hi - lo + 1;
    return Poly(lo + static_cast<long>(rng.next_u32() % span));
  });
}

namespace {

struct Checks {
  std::vector<CheckOutcome>& out;
  int max_degree;

  void record(const std::string& name, bool ok, const std::string& detail = {})
  {
    out.push_back({name, ok, ok ? std::string() : detail});
  }

  void equal(const std::string& name, const Poly& a, const Poly& b)
  {
    record(name, a == b, "lhs = " + a.str() + "\nrhs = " + b.str());
  }

  void equal_moments(const std::string& name, const Umbra& a, const Umbra& b, int n)
  {
    for (int k = 0; k <= n; ++k) {
      if (!(a.moment(k) == b.moment(k))) {
        record(name, false,
               "moment " + std::to_string(k) + ": " + a.moment(k).str() + " vs " +
                   b.moment(k).str());
        return;
      }
    }
    record(name, true);
  }

  int cap(int stated) const { return std::min(max_degree, stated); }
};

std::vector<std::pair<std::string, Umbra>> special_test_umbrae()
{
  return {
      {"u", unity()},           {"ubar", boolean_unity()}, {"chi", singleton()},
      {"beta", bell_umbra()},   {"iota", bernoulli_umbra()}, {"euler", euler_umbra()},
      {"varsigma", gaussian_seed()},
  };
}

std::vector<std::pair<std::string, Umbra>> property_test_umbrae()
{
  auto v = special_test_umbrae();
  v.emplace_back("rand1", random_integer_umbra(11));
  v.emplace_back("rand2", random_integer_umbra(23));
  v.emplace_back("rand3", random_integer_umbra(47));
  return v;
}

// Table-3/5 processes with the parameter choices that keep every identity a
// Laurent-polynomial one. The Gaussian scale is named v here because the
// martingale and Sheffer identities reserve s for the conditioning time.
std::vector<std::pair<std::string, Umbra>> table_processes()
{
  Poly v = Poly::var("v");
  Poly lam = Poly::var("lambda");
  Poly p = Poly::var("p");
  Poly d = Poly::var("d");
  Poly a = Poly::var("a");
  return {
      {"uniform[0,1] walk", dot(Poly(-1L), bernoulli_umbra())},
      {"bernoulli(1/2) walk",
       scale(Poly(Rational(1, 2)), add(unity(), dot(Poly(-1L), euler_umbra())))},
      {"bernoulli(p) walk", dot(singleton(), dot(p, bell_umbra()))},
      {"a-fold uniform walk", dot(-a, bernoulli_umbra())},
      {"brownian(v)", partition_umbra(scale(v, gaussian_seed()))},
      {"poisson(lambda)", dot(lam, bell_umbra())},
      {"gamma(1)", boolean_unity()},
      {"gamma(lambda)", dot(lam, boolean_unity())},
      {"pascal(d)", dot(boolean_unity(), dot(d, bell_umbra()))},
  };
}

void run_umbral(Checks& c)
{
  Poly t = Poly::var("t");
  Poly s = Poly::var("s");
  Poly cc = Poly::var("c");
  Poly av = Poly::var("a");

  // combinatorial substrate
  {
    bool ok = true;
    std::vector<Poly> args(12);
    for (int i = 0; i < 12; ++i)
      args[i] = Poly::var("a" + std::to_string(i + 1));
    for (int n = 1; n <= c.cap(12) && ok; ++n) {
      Poly sum;
      for (int k = 1; k <= n; ++k)
        sum += partial_bell(n, k, args);
      ok = complete_bell(n, args) == sum;
    }
    c.record("complete Bell equals the partial-Bell sum", ok);

    ok = true;
    for (int n = 0; n <= c.cap(15) && ok; ++n) {
      Poly sum;
      for (int k = 0; k <= n; ++k)
        sum += t.pow(k) * stirling_first(n, k);
      ok = sum == lower_factorial(n, t);
    }
    c.record("Stirling numbers expand the falling factorial", ok);

    ok = true;
    for (int n = 1; n <= c.cap(10) && ok; ++n)
      ok = multi_index_partitions(MultiIndex{std::vector<int>{n}}).size() ==
           partitions(n).size();
    c.record("d=1 multi-index partitions biject with integer partitions", ok);
  }

  // Table 1 moments
  {
    Umbra ub = boolean_unity();
    bool ok = true;
    for (int n = 0; n <= c.cap(10); ++n)
      ok = ok && ub.moment(n) == Poly(factorial(static_cast<unsigned>(n)));
    c.record("ubar moments are n!", ok);
    Umbra chi = singleton();
    ok = chi.moment(0) == Poly(1L) && chi.moment(1) == Poly(1L);
    for (int n = 2; n <= c.cap(10); ++n)
      ok = ok && chi.moment(n).is_zero();
    c.record("chi moments are 1,1,0,...", ok);
    std::vector<long> bells = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    ok = true;
    for (int n = 0; n <= std::min(c.cap(8), 8); ++n)
      ok = ok && bell_umbra().moment(n) == Poly(bells[n]);
    c.record("beta moments are the Bell numbers", ok);
    std::vector<Rational> berns = {Rational(1),      Rational(-1, 2), Rational(1, 6),
                                   Rational(0),      Rational(-1, 30), Rational(0),
                                   Rational(1, 42)};
    ok = true;
    for (int n = 0; n <= std::min(c.cap(6), 6); ++n)
      ok = ok && bernoulli_umbra().moment(n) == Poly(berns[n]);
    c.record("iota moments are the Bernoulli numbers", ok);
    std::vector<long> eulers = {1, 0, -1, 0, 5, 0, -61, 0, 1385};
    ok = true;
    for (int n = 0; n <= std::min(c.cap(8), 8); ++n)
      ok = ok && euler_umbra().moment(n) == Poly(eulers[n]);
    c.record("euler moments are the Euler numbers", ok);
  }

  // generating-function double path for each primitive (Table 2)
  {
    const int n = c.cap(12);
    if (n >= 1) {
      for (const auto& [name, alpha] : property_test_umbrae()) {
        Series f = alpha.egf(n);
        bool ok = true;
        Series ft = f.pow(t);
        Umbra dt_alpha = dot(t, alpha);
        for (int k = 0; k <= n; ++k)
          ok = ok && dt_alpha.moment(k) == ft[k];
        c.record("series path: dot(t, " + name + ")", ok);

        Series sum = f * f;
        Umbra two = add(alpha, alpha);
        ok = true;
        for (int k = 0; k <= n; ++k)
          ok = ok && two.moment(k) == sum[k];
        c.record("series path: add(" + name + ", " + name + ")", ok);

        Series cum = f.log();
        Umbra ka = cumulants(alpha);
        ok = true;
        for (int k = 1; k <= n; ++k)
          ok = ok && ka.moment(k) == cum[k];
        c.record("series path: cumulants(" + name + ")", ok);

        Series part = f;
        part[0] = Poly();
        part = part.exp();
        Umbra ba = partition_umbra(alpha);
        ok = true;
        for (int k = 0; k <= n; ++k)
          ok = ok && ba.moment(k) == part[k];
        c.record("series path: partition_umbra(" + name + ")", ok);

        Series der(n);
        for (int k = 1; k <= n; ++k)
          der[k] = f[k - 1] * Rational(k);
        der[0] = Poly(1L);
        Umbra da = derivative_umbra(alpha);
        ok = true;
        for (int k = 0; k <= n; ++k)
          ok = ok && da.moment(k) == der[k];
        c.record("series path: derivative(" + name + ")", ok);
      }
      // composition vs compose_shifted on two catalogue umbrae
      {
        Umbra a = bernoulli_umbra(), g = singleton();
        Series comp = a.egf(n).compose_shifted(
            series_from_moments(g.moments(n), n));
        Umbra ag = composition(a, g);
        bool ok = true;
        for (int k = 0; k <= n; ++k)
          ok = ok && ag.moment(k) == comp[k];
        c.record("series path: composition(iota, chi)", ok);
      }
      {
        Umbra a = unity(), g = random_integer_umbra(5);
        Series comp = a.egf(n).compose_shifted(g.egf(n));
        Umbra ag = composition(a, g);
        bool ok = true;
        for (int k = 0; k <= n; ++k)
          ok = ok && ag.moment(k) == comp[k];
        c.record("series path: composition(u, random)", ok);
      }
    }
  }

  // distributive law in Q[t,s]
  for (const auto& [name, alpha] : property_test_umbrae())
    c.equal_moments("distributive (t+s).alpha, " + name, dot(t + s, alpha),
                    add(dot(t, alpha), dot(s, alpha)), c.cap(10));

  // associativity of the umbral dot product
  {
    Umbra a = random_integer_umbra(3, 0, 2);
    Umbra b = random_integer_umbra(17, 0, 2);
    Umbra g = random_integer_umbra(29, 0, 2);
    c.equal_moments("associativity (a.b).g = a.(b.g)", dot(dot(a, b), g),
                    dot(a, dot(b, g)), c.cap(8));
  }

  // inverse umbra annihilates
  for (const auto& [name, alpha] : property_test_umbrae())
    c.equal_moments("-t.alpha + t.alpha = epsilon, " + name,
                    add(inverse(t, alpha), dot(t, alpha)), augmentation(), c.cap(10));

  // cumulant properties
  {
    Umbra a = random_integer_umbra(31);
    Umbra b = random_integer_umbra(37);
    c.equal_moments("cumulant additivity", cumulants(add(a, b)),
                    disjoint_sum(cumulants(a), cumulants(b)), c.cap(10));
    c.equal_moments("cumulant homogeneity", cumulants(scale(cc, a)),
                    scale(cc, cumulants(a)), c.cap(10));
    Umbra shifted = add(a, scale(av, unity()));
    Umbra lhs = cumulants(shifted);
    Umbra rhs = disjoint_sum(cumulants(a), scale(av, singleton()));
    c.equal_moments("cumulant semi-invariance", lhs, rhs, c.cap(10));
  }

  // named reductions
  c.equal_moments("chi.beta = u", dot(singleton(), bell_umbra()), unity(), c.cap(12));
  c.equal_moments("cumulants(beta) = u", cumulants(bell_umbra()), unity(), c.cap(12));
  c.equal_moments("partition_umbra(cumulants(alpha)) = alpha",
                  partition_umbra(cumulants(random_integer_umbra(41))),
                  random_integer_umbra(41), c.cap(10));
  c.equal_moments("composition(u, gamma) = partition_umbra(gamma)",
                  composition(unity(), random_integer_umbra(43)),
                  partition_umbra(random_integer_umbra(43)), c.cap(10));
  c.equal_moments("composition(alpha, chi) = alpha",
                  composition(random_integer_umbra(53), singleton()),
                  random_integer_umbra(53), c.cap(10));
  {
    Umbra a = random_integer_umbra(59);
    // force first moment 1 so the compositional inverse exists
    Umbra unit_first = disjoint_sum(
        a, Umbra([a](int i) { return i == 1 ? Poly(1L) - a.moment(1) : Poly(); }));
    c.equal_moments("composition(alpha, alpha^{<-1>}) = chi",
                    composition(unit_first, comp_inverse(unit_first)), singleton(),
                    c.cap(10));
    c.equal_moments("beta.(a ++ b) = beta.a + beta.b",
                    partition_umbra(disjoint_sum(a, random_integer_umbra(61))),
                    add(partition_umbra(a), partition_umbra(random_integer_umbra(61))),
                    c.cap(8));
  }

  // boolean and free cumulants
  {
    const int n = c.cap(10);
    std::vector<Poly> ones(n + 1, Poly(1L));
    auto b = moments_to_boolean_cumulants(ones);
    bool ok = n < 1 || b[1] == Poly(1L);
    for (int k = 2; k <= n; ++k)
      ok = ok && b[k].is_zero();
    c.record("boolean cumulants of (1,1,1,...) are (1,0,0,...)", ok);

    std::vector<Poly> semicircle = {Poly(1L), Poly(), Poly(1L), Poly(), Poly(2L),
                                    Poly(),   Poly(5L), Poly(), Poly(14L)};
    semicircle.resize(std::min<std::size_t>(semicircle.size(), n + 1));
    if (semicircle.size() >= 3) {
      auto r = moments_to_free_cumulants(semicircle);
      ok = r[2] == Poly(1L);
      for (std::size_t k = 1; k < r.size(); ++k)
        if (k != 2)
          ok = ok && r[k].is_zero();
      c.record("free cumulants of the semicircle law are (0,1,0,...)", ok);
    }

    Umbra a = random_integer_umbra(67);
    auto m = a.moments(n);
    auto bb = moments_to_boolean_cumulants(m);
    auto rr = moments_to_free_cumulants(m);
    auto kk = moments_to_cumulants(m);
    c.record("boolean round trip", boolean_cumulants_to_moments(bb) == m);
    c.record("free round trip", free_cumulants_to_moments(rr) == m);
    c.record("classical round trip", cumulants_to_moments(kk) == m);
  }

  // Levy constructors
  {
    Poly v = Poly::var("v");
    LevyTriplet gauss{Poly(), v, {}};
    Umbra kg = cumulants(levy_umbra(gauss));
    bool ok = kg.moment(1).is_zero() && kg.moment(2) == v * v;
    for (int k = 3; k <= c.cap(8); ++k)
      ok = ok && kg.moment(k).is_zero();
    c.record("gaussian triplet cumulants are (0, v^2, 0, ...)", ok);

    LevyTriplet drift{Poly(5L), Poly(), {}};
    Umbra kd = cumulants(levy_umbra(drift));
    ok = kd.moment(1) == Poly(5L);
    for (int k = 2; k <= c.cap(8); ++k)
      ok = ok && kd.moment(k).is_zero();
    c.record("drift-only triplet cumulants are (c0, 0, ...)", ok);

    Poly lam = Poly::var("lambda");
    std::vector<Poly> jumps(c.cap(10) + 1, lam);
    if (!jumps.empty())
      jumps[0] = Poly(1L);
    if (jumps.size() > 1)
      jumps[1] = Poly();
    LevyTriplet poisson{lam, Poly(), jumps};
    c.equal_moments("poisson triplet equals (lambda).beta", levy_umbra(poisson),
                    dot(lam, bell_umbra()), c.cap(10));

    // deterministic unit-rate subordination is the identity
    LevyTriplet unit_time{Poly(1L), Poly(), {}};
    c.equal_moments("unit-drift subordination is the identity",
                    subordinate(unit_time, poisson), levy_umbra(poisson), c.cap(8));
  }
}

void run_tsh(Checks& c)
{
  TshVars vars;
  for (const auto& [name, alpha] : property_test_umbrae()) {
    bool ok = true;
    std::string why;
    for (int k = 0; k <= c.cap(10) && ok; ++k) {
      Poly a = q_poly(alpha, k, vars).value;
      Poly b = q_coeffs_direct(alpha, k, vars).value;
      Poly d = complete_bell_form(alpha, k, vars).value;
      if (!(a == b && a == d)) {
        ok = false;
        why = "k=" + std::to_string(k) + "\nq_poly = " + a.str() +
              "\ndirect = " + b.str() + "\nbell = " + d.str();
      }
    }
    c.record("Q path equivalence, " + name, ok, why);
  }

  for (const auto& [name, alpha] : table_processes()) {
    bool ok = true;
    std::string why;
    for (int k = 0; k <= c.cap(8) && ok; ++k) {
      auto r = martingale_check(alpha, k, vars);
      if (!r.ok) {
        ok = false;
        why = "k=" + std::to_string(k) + "\nlhs = " + r.lhs.str() +
              "\nrhs = " + r.rhs.str();
      }
    }
    c.record("martingale identity, " + name, ok, why);

    ok = true;
    for (int k = 0; k <= c.cap(10) && ok; ++k)
      ok = wald_check(alpha, k, vars);
    c.record("Wald identity, " + name, ok);
  }

  for (const auto& [name, alpha] : property_test_umbrae()) {
    bool ok = true;
    for (int k = 0; k <= c.cap(12) && ok; ++k) {
      Poly q = q_poly(alpha, k, vars).value;
      ok = q.coefficient(vars.x, k) == Poly(1L) &&
           q.substitute(vars.t, Poly()) == Poly::var(vars.x).pow(k);
    }
    c.record("monic and Q_k(x,0) = x^k, " + name, ok);

    ok = true;
    for (int k = 1; k <= c.cap(8) && ok; ++k)
      ok = appell_check(alpha, k, vars);
    c.record("Appell property, " + name, ok);

    ok = true;
    for (int k = 0; k <= c.cap(8) && ok; ++k)
      ok = sheffer_check(alpha, k, vars).ok;
    c.record("Sheffer identity, " + name, ok);
  }

  // k-fold x-derivative of Q_k is k!
  {
    Umbra a = random_integer_umbra(71);
    bool ok = true;
    for (int k = 0; k <= c.cap(10) && ok; ++k) {
      Poly q = q_poly(a, k, vars).value;
      for (int j = 0; j < k; ++j)
        q = q.derivative(vars.x);
      ok = q == Poly(factorial(static_cast<unsigned>(k)));
    }
    c.record("Appell chain d^k/dx^k Q_k = k!", ok);
  }

  // cumulant path: alpha == beta . kappa_alpha gives the same Q
  {
    Umbra a = random_integer_umbra(73);
    Umbra via_cumulants = partition_umbra(cumulants(a));
    bool ok = true;
    for (int k = 0; k <= c.cap(8) && ok; ++k)
      ok = q_poly(a, k, vars).value == q_poly(via_cumulants, k, vars).value;
    c.record("Q built from beta.kappa_alpha matches", ok);
  }

  // coefficient characterization
  {
    Umbra a = boolean_unity();
    const int k = std::max(1, c.cap(6));
    std::vector<Poly> unit(k + 1);
    unit[k] = Poly(1L);
    c.equal("tsh_from_initial(e_k) = Q_k", tsh_from_initial(a, unit, vars),
            q_poly(a, k, vars).value);

    // a TSH combination with constant coefficients passes the checker
    Poly combo = q_poly(a, k, vars).value * Rational(3) -
                 q_poly(a, k - 1, vars).value * Rational(7);
    c.record("tsh_check accepts a Q-combination", tsh_check(a, combo, k, vars).ok);
    Poly not_tsh = combo + Poly::var(vars.t);
    c.record("tsh_check rejects a non-TSH polynomial",
             !tsh_check(a, not_tsh, k, vars).ok);
    c.record("tsh_check accepts the zero polynomial",
             tsh_check(a, Poly(), k, vars).ok);
  }
}

void run_families(Checks& c)
{
  TshVars vars;
  FamilyParams symbolic;
  symbolic.s = Poly::var("s");
  symbolic.lambda = Poly::var("lambda");
  symbolic.p = Poly::var("p");
  symbolic.a = Poly::var("a");
  symbolic.d = Poly::var("d");

  for (Family f : all_families()) {
    bool ok = true;
    std::string why;
    for (int k = 0; k <= c.cap(8) && ok; ++k) {
      Poly u = umbral_construction(f, k, symbolic, vars);
      Poly cl = classical(f, k, symbolic, vars) * normalization(f, k, symbolic);
      if (!(u == cl)) {
        ok = false;
        why = "k=" + std::to_string(k) + "\numbral = " + u.str() +
              "\nclassical = " + cl.str();
      }
    }
    c.record("classical = umbral, " + std::string(family_name(f)), ok, why);
  }

  // every family passes the converse TSH checker against its process
  for (Family f : all_families()) {
    Umbra proc = family_process(f, symbolic);
    bool ok = true;
    std::string why;
    for (int k = 1; k <= c.cap(6) && ok; ++k) {
      Poly pk = umbral_construction(f, k, symbolic, vars);
      auto r = tsh_check(proc, pk, k, vars);
      if (!r.ok) {
        ok = false;
        why = "k=" + std::to_string(k) + "\npoly = " + r.lhs.str() +
              "\nrebuilt = " + r.rhs.str();
      }
    }
    c.record("TSH checker, " + std::string(family_name(f)), ok, why);
  }

  // orthogonality of the Levy-Meixner families
  for (Family f : {Family::hermite, Family::poisson_charlier, Family::laguerre,
                   Family::meixner}) {
    bool ok = true;
    std::string why;
    for (int n = 0; n <= c.cap(5) && ok; ++n)
      for (int m = 0; m < n && ok; ++m) {
        Poly e = orthogonality_check(f, n, m, symbolic, vars);
        if (!e.is_zero()) {
          ok = false;
          why = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                "\nE[VnVm] = " + e.str();
        }
      }
    for (int n = 1; n <= c.cap(3) && ok; ++n)
      if (orthogonality_check(f, n, n, symbolic, vars).is_zero()) {
        ok = false;
        why = "diagonal value vanished at n=" + std::to_string(n);
      }
    c.record("orthogonality, " + std::string(family_name(f)), ok, why);
  }

  // Levy-Sheffer: the two routes agree, and gamma = chi reduces to Q_k
  {
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 5 && ok; ++trial) {
      Umbra base = random_integer_umbra(101 + 2 * trial, 0, 2);
      Umbra alpha = random_integer_umbra(211 + 2 * trial, 0, 2);
      // unit first moment keeps gamma invertible
      Umbra gamma = disjoint_sum(base, Umbra([base](int i) {
                                   return i == 1 ? Poly(1L) - base.moment(1) : Poly();
                                 }));
      for (int k = 0; k <= c.cap(6) && ok; ++k) {
        Poly a = levy_sheffer(alpha, gamma, k, vars);
        Poly b = levy_sheffer_combination(alpha, gamma, k, vars);
        if (!(a == b)) {
          ok = false;
          why = "trial " + std::to_string(trial) + " k=" + std::to_string(k) +
                "\ndirect = " + a.str() + "\ncombination = " + b.str();
        }
      }
    }
    c.record("Levy-Sheffer direct = combination", ok, why);

    Umbra alpha0 = random_integer_umbra(307);
    ok = true;
    for (int k = 0; k <= c.cap(6) && ok; ++k)
      ok = levy_sheffer(dot(Poly(-1L), alpha0), singleton(), k, vars) ==
           q_poly(alpha0, k, vars).value;
    c.record("Levy-Sheffer with gamma = chi reduces to Q_k", ok);
  }

  // random-walk / Levy coherence at integer times
  {
    Umbra alpha = random_integer_umbra(313);
    bool ok = true;
    for (long nn = 2; nn <= 3 && ok; ++nn) {
      Umbra walk = dot(Poly(nn), alpha);
      Umbra brute = alpha;
      for (long j = 1; j < nn; ++j)
        brute = add(brute, alpha);
      for (int k = 0; k <= c.cap(8) && ok; ++k) {
        ok = walk.moment(k) == brute.moment(k);
        Poly qt = q_poly(alpha, k, vars).value.substitute(vars.t, Poly(nn));
        Poly qn = shifted_dot_moment(Poly::var(vars.x), Poly(-nn), alpha, k);
        ok = ok && qt == qn;
      }
    }
    c.record("random walk coherence at t = n", ok);
  }
}

void run_ks(Checks& c)
{
  {
    bool ok = true;
    std::string why;
    for (int n = 0; n <= c.cap(10) && ok; ++n)
      if (!(ks_recursive(n) == ks_umbral(n))) {
        ok = false;
        why = "n=" + std::to_string(n);
      }
    c.record("Kailath-Segall recursion = umbral", ok, why);
  }

  {
    bool ok = true;
    for (int n = 0; n <= c.cap(8) && ok; ++n)
      ok = ks_homogeneity_check(n);
    c.record("Kailath-Segall homogeneity", ok);
  }

  TshVars vars;
  FamilyParams params;
  params.s = Poly::var("s");
  params.lambda = Poly::var("lambda");
  params.d = Poly::var("d");

  auto check_family = [&](Family f, const std::string& label,
                          const std::function<Poly(int)>& expected) {
    bool ok = true;
    std::string why;
    for (int k = 0; k <= c.cap(6) && ok; ++k) {
      Poly got = ks_specialize(f, k, params, vars);
      Poly want = expected(k);
      if (!(got == want)) {
        ok = false;
        why = "k=" + std::to_string(k) + "\nks = " + got.str() +
              "\nfamilies = " + want.str();
      }
    }
    c.record("KS specialization, " + label, ok, why);
  };
  check_family(Family::hermite, "hermite",
               [&](int k) { return umbral_construction(Family::hermite, k, params, vars); });
  check_family(Family::poisson_charlier, "poisson-charlier",
               [&](int k) { return classical(Family::poisson_charlier, k, params, vars); });
  check_family(Family::laguerre, "laguerre",
               [&](int k) { return classical(Family::laguerre, k, params, vars); });
  check_family(Family::actuarial, "actuarial",
               [&](int k) { return umbral_construction(Family::actuarial, k, params, vars); });
  check_family(Family::meixner, "meixner",
               [&](int k) { return umbral_construction(Family::meixner, k, params, vars); });

  // each hard-coded indeterminate assignment satisfies the cumulant relation
  {
    Poly x = Poly::var(vars.x);
    Poly t = Poly::var(vars.t);
    auto cumulant_sum = [&](const Umbra& space, const Umbra& time, int i) {
      return cumulants(space).moment(i) + cumulants(time).moment(i);
    };
    struct Row {
      Family f;
      Umbra space, time;
    };
    std::vector<Row> rows = {
        {Family::hermite, dot(x, unity()),
         dot(-t, family_process(Family::hermite, params))},
        {Family::poisson_charlier, dot(x, singleton()),
         dot(-t * params.lambda, unity())},
        {Family::laguerre, dot(x, unity()), dot(-t, boolean_unity())},
        {Family::actuarial, dot(params.lambda * t, unity()),
         dot(-x, bell_umbra())},
        {Family::meixner,
         dot(x, add(dot(Poly(-1L), singleton()),
                    scale(params.p_inverse(), singleton()))),
         dot(-t, singleton())},
    };
    for (const auto& row : rows) {
      bool ok = true;
      std::string why;
      for (int i = 1; i <= c.cap(8) && ok; ++i) {
        Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
        Poly want = ks_indeterminate(row.f, i, params, vars) *
                    (sign * factorial(static_cast<unsigned>(i - 1)));
        Poly got = cumulant_sum(row.space, row.time, i);
        if (!(got == want)) {
          ok = false;
          why = "i=" + std::to_string(i) + "\ncumulants = " + got.str() +
                "\nassignment = " + want.str();
        }
      }
      c.record("KS indeterminates satisfy the cumulant relation, " +
                   std::string(family_name(row.f)),
               ok, why);
    }
  }
}

void run_multivariate(Checks& c)
{
  TshVars vars;
  Poly t = Poly::var(vars.t);
  Poly s = Poly::var(vars.s);
  const int d = 2;

  auto random_tuple = [](int dim, std::uint64_t seed) {
    return MultiUmbra(dim, [seed](const MultiIndex& i) {
      Philox rng(seed, static_cast<std::uint64_t>(i.total()) * 1315423911u +
                           static_cast<std::uint64_t>(
                               std::hash<std::string>{}(i.str())));
      return Poly(static_cast<long>(rng.next_u32() % 5) - 2);
    });
  };

  // brute force: n-fold uncorrelated sum versus the partition formula
  {
    bool ok = true;
    std::string why;
    MultiUmbra mu = random_tuple(d, 401);
    for (long n = 2; n <= 3 && ok; ++n) {
      MultiUmbra brute = mu;
      for (long j = 1; j < n; ++j)
        brute = add(brute, mu);
      MultiUmbra viadot = dot(Poly(n), mu);
      for (const auto& i : multi_indices_up_to(d, c.cap(4))) {
        if (!(brute.moment(i) == viadot.moment(i))) {
          ok = false;
          why = "n=" + std::to_string(n) + " i=" + i.str() + "\nbrute = " +
                brute.moment(i).str() + "\npartition formula = " +
                viadot.moment(i).str();
          break;
        }
      }
    }
    c.record("dot_multi matches the n-fold expansion", ok, why);
  }

  // distributivity in Q[s,t]
  {
    MultiUmbra mu = random_tuple(d, 409);
    MultiUmbra lhs = dot(t + s, mu);
    MultiUmbra rhs = add(dot(t, mu), dot(s, mu));
    bool ok = true;
    std::string why;
    for (const auto& i : multi_indices_up_to(d, c.cap(5)))
      if (!(lhs.moment(i) == rhs.moment(i))) {
        ok = false;
        why = "i=" + i.str();
        break;
      }
    c.record("dot_multi distributivity", ok, why);
  }

  // d = 1 degeneration
  {
    Umbra alpha = random_integer_umbra(419);
    MultiUmbra mu(1, [alpha](const MultiIndex& i) { return alpha.moment(i[0]); });
    Umbra uni = dot(t, alpha);
    MultiUmbra multi = dot(t, mu);
    bool ok = true;
    for (int n = 0; n <= c.cap(8); ++n) {
      MultiIndex i{std::vector<int>{n}};
      if (!(multi.moment(i) == uni.moment(n))) {
        ok = false;
        break;
      }
    }
    c.record("d=1 degeneration of dot_multi", ok);

    Umbra ka = cumulants(alpha);
    MultiUmbra km = cumulants_multi(mu);
    ok = true;
    for (int n = 1; n <= c.cap(8); ++n)
      ok = ok && km.moment(MultiIndex{std::vector<int>{n}}) == ka.moment(n);
    c.record("d=1 degeneration of cumulants_multi", ok);

    ok = true;
    for (int n = 0; n <= c.cap(6); ++n) {
      MultiIndex i{std::vector<int>{n}};
      Poly quni = q_poly(alpha, n, vars).value.substitute(vars.x, Poly::var(multi_x(1)));
      ok = ok && q_poly_multi(mu, i, vars) == quni;
    }
    c.record("d=1 degeneration of q_poly_multi", ok);
  }

  // moment-cumulant round trip and product-tuple mixed cumulants
  {
    MultiUmbra mu = random_tuple(d, 431);
    MultiUmbra rt = partition_multi(cumulants_multi(mu));
    bool ok = true;
    for (const auto& i : multi_indices_up_to(d, c.cap(6)))
      ok = ok && rt.moment(i) == mu.moment(i);
    c.record("multivariate cumulant round trip", ok);

    // independent coordinates: mixed cumulants vanish
    Umbra a1 = random_integer_umbra(433);
    Umbra a2 = random_integer_umbra(439);
    MultiUmbra prod(2, [a1, a2](const MultiIndex& i) {
      return a1.moment(i[0]) * a2.moment(i[1]);
    });
    MultiUmbra kp = cumulants_multi(prod);
    ok = true;
    for (const auto& i : multi_indices_up_to(2, c.cap(6)))
      if (i[0] > 0 && i[1] > 0)
        ok = ok && kp.moment(i).is_zero();
    c.record("mixed cumulants of independent coordinates vanish", ok);

    // the partition-sum route is an oracle for the EGF route
    auto bell_weight = [](int) { return Poly(1L); };
    auto chi_weight = [](int l) {
      Rational f = factorial(static_cast<unsigned>(l - 1));
      return Poly((l % 2 == 1) ? f : -f);
    };
    MultiUmbra km = cumulants_multi(mu);
    MultiUmbra pm = partition_multi(mu);
    ok = true;
    for (const auto& i : multi_indices_up_to(d, c.cap(5))) {
      ok = ok && km.moment(i) == dot_weighted_moment(chi_weight, mu, i);
      ok = ok && pm.moment(i) == dot_weighted_moment(bell_weight, mu, i);
    }
    c.record("EGF route matches the partition route", ok);
  }

  // special tuples
  {
    MultiUmbra delta = gaussian_tuple(2);
    bool ok = delta.moment(MultiIndex{{1, 1}}).is_zero() &&
              delta.moment(MultiIndex{{2, 0}}) == Poly(1L);
    c.record("gaussian tuple moments", ok);
    MultiUmbra u2 = unity_tuple(2);
    ok = true;
    for (const auto& i : multi_indices_up_to(2, c.cap(4)))
      ok = ok && u2.moment(i) == Poly(1L);
    c.record("unity tuple moments", ok);
    Umbra marg = bernoulli_tuple(3).marginal(1);
    ok = true;
    for (int n = 0; n <= c.cap(6); ++n)
      ok = ok && marg.moment(n) == bernoulli_umbra().moment(n);
    c.record("bernoulli tuple marginal", ok);
  }

  // multivariate Levy constructor
  {
    std::vector<std::vector<Poly>> eye = {{Poly(1L), Poly()}, {Poly(), Poly(1L)}};
    MultiLevyTriplet gauss{{Poly(), Poly()}, eye, {}};
    MultiUmbra k = cumulants_multi(levy_multi(gauss));
    bool ok = k.moment(MultiIndex{{2, 0}}) == Poly(1L) &&
              k.moment(MultiIndex{{0, 2}}) == Poly(1L) &&
              k.moment(MultiIndex{{1, 1}}).is_zero();
    for (const auto& i : multi_indices_up_to(2, c.cap(4)))
      if (i.total() >= 3)
        ok = ok && k.moment(i).is_zero();
    c.record("pure gaussian triplet cumulants", ok);

    MultiLevyTriplet drift{{Poly(2L), Poly(3L)}, {}, {}};
    MultiUmbra kd = cumulants_multi(levy_multi(drift));
    ok = kd.moment(MultiIndex{{1, 0}}) == Poly(2L) &&
         kd.moment(MultiIndex{{0, 1}}) == Poly(3L);
    for (const auto& i : multi_indices_up_to(2, c.cap(4)))
      if (i.total() >= 2)
        ok = ok && kd.moment(i).is_zero();
    c.record("drift-only triplet cumulants", ok);
  }

  // Table-9 families: monic, Q(x,0) = x^i, martingale identity
  {
    std::vector<std::vector<Poly>> cmat = {{Poly(1L), Poly()},
                                           {Poly(Rational(1, 2)), Poly(1L)}};
    struct Fam {
      const char* label;
      MultiUmbra proc;
    };
    std::vector<Fam> fams = {
        {"hermite", multi_family_process(MultiFamily::hermite, 2, cmat)},
        {"bernoulli", multi_family_process(MultiFamily::bernoulli, 2)},
        {"euler", multi_family_process(MultiFamily::euler, 2)},
    };
    for (const auto& fam : fams) {
      bool ok = true;
      std::string why;
      for (const auto& i : multi_indices_up_to(2, c.cap(4))) {
        Poly q = q_poly_multi(fam.proc, i, vars);
        Poly xi(1L);
        for (int j = 0; j < 2; ++j)
          xi *= Poly::var(multi_x(j + 1)).pow(i[j]);
        if (!(q.substitute(vars.t, Poly()) == xi)) {
          ok = false;
          why = "Q(x,0) != x^i at i=" + i.str();
          break;
        }
        auto r = martingale_check_multi(fam.proc, i, vars);
        if (!r.ok) {
          ok = false;
          why = "martingale fails at i=" + i.str() + "\nlhs = " + r.lhs.str() +
                "\nrhs = " + r.rhs.str();
          break;
        }
      }
      c.record("table-9 family " + std::string(fam.label), ok, why);
    }
  }

  // multivariate Levy-Sheffer against the d-variate generating function
  {
    MultiUmbra mu = random_tuple(2, 443);
    MultiUmbra base = random_tuple(2, 449);
    // force unit first-order moments
    MultiUmbra nu(2, [base](const MultiIndex& i) {
      if (i.total() == 1)
        return Poly(1L);
      return base.moment(i);
    });
    bool ok = true;
    std::string why;
    const int order = std::max(1, c.cap(3));
    Poly xsum = Poly::var(multi_x(1)) + Poly::var(multi_x(2));
    MSeries f = mu.egf(order).pow(t);
    MSeries h = nu.egf(order);
    h.set(MultiIndex::zero(2), Poly());
    MSeries g = (h * xsum).exp();
    MSeries total = f * g;
    for (const auto& k : multi_indices_up_to(2, order)) {
      Poly direct = levy_sheffer_multi(mu, nu, k, vars);
      if (!(direct == total.at(k))) {
        ok = false;
        why = "k=" + k.str() + "\ndirect = " + direct.str() +
              "\nseries = " + total.at(k).str();
        break;
      }
    }
    c.record("multivariate Levy-Sheffer series oracle", ok, why);
  }
}

} // namespace

std::vector<CheckOutcome> run_suite(Suite s, int max_degree)
{
  std::vector<CheckOutcome> out;
  Checks c{out, max_degree};
  switch (s) {
  case Suite::umbral:
    run_umbral(c);
    break;
  case Suite::tsh:
    run_tsh(c);
    break;
  case Suite::families:
    run_families(c);
    break;
  case Suite::ks:
    run_ks(c);
    break;
  case Suite::multivariate:
    run_multivariate(c);
    break;
  case Suite::all:
    run_umbral(c);
    run_tsh(c);
    run_families(c);
    run_ks(c);
    run_multivariate(c);
    break;
  }
  return out;
}

} // namespace umbral
