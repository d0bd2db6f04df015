// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <umbral/families.hpp>
#include <umbral/kailath_segall.hpp>
#include <umbral/multivar.hpp>
#include <umbral/render.hpp>
#include <umbral/simulate.hpp>
#include <umbral/tsh.hpp>
#include <umbral/verification.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace umbral;

namespace {

struct Criterion {
  int id;
  std::string label;
  std::function<bool(std::string&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::pair<std::string, Umbra>> ten_test_umbrae()
{
  return {
      {"u", unity()},
      {"ubar", boolean_unity()},
      {"chi", singleton()},
      {"beta", bell_umbra()},
      {"iota", bernoulli_umbra()},
      {"euler", euler_umbra()},
      {"varsigma", gaussian_seed()},
      {"rand1", random_integer_umbra(11)},
      {"rand2", random_integer_umbra(23)},
      {"rand3", random_integer_umbra(47)},
  };
}

std::vector<std::pair<std::string, Umbra>> family_processes()
{
  Poly v = Poly::var("v");
  Poly lam = Poly::var("lambda");
  Poly p = Poly::var("p");
  Poly d = Poly::var("d");
  Poly a = Poly::var("a");
  return {
      {"uniform walk (-1.iota)", dot(Poly(-1L), bernoulli_umbra())},
      {"bernoulli(1/2) walk",
       scale(Poly(Rational(1, 2)), add(unity(), dot(Poly(-1L), euler_umbra())))},
      {"bernoulli(p) walk", dot(singleton(), dot(p, bell_umbra()))},
      {"a-fold uniform walk", dot(-a, bernoulli_umbra())},
      {"brownian", partition_umbra(scale(v, gaussian_seed()))},
      {"poisson", dot(lam, bell_umbra())},
      {"gamma", boolean_unity()},
      {"gamma(lambda)", dot(lam, boolean_unity())},
      {"pascal", dot(boolean_unity(), dot(d, bell_umbra()))},
  };
}

bool criterion1(std::string& note)
{
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& [name, alpha] : ten_test_umbrae())
    for (int k = 0; k <= 10; ++k) {
      Poly a = q_poly(alpha, k).value;
      if (!(a == q_coeffs_direct(alpha, k).value) ||
          !(a == complete_bell_form(alpha, k).value)) {
        note = name + " at k=" + std::to_string(k);
        return false;
      }
    }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "10 umbrae, k <= 10, " << dt << " s";
  note = os.str();
  return dt < 60.0;
}

bool criterion2(std::string& note)
{
  for (const auto& [name, alpha] : family_processes())
    for (int k = 0; k <= 8; ++k) {
      auto r = martingale_check(alpha, k);
      if (!r.ok) {
        note = name + " at k=" + std::to_string(k);
        return false;
      }
    }
  note = "9 processes, k <= 8, exact in Q[x,s,t]";
  return true;
}

bool criterion3(std::string& note)
{
  for (const auto& [name, alpha] : family_processes())
    for (int k = 0; k <= 10; ++k)
      if (!wald_check(alpha, k)) {
        note = name + " at k=" + std::to_string(k);
        return false;
      }
  note = "9 processes, k <= 10, exact in Q[t]";
  return true;
}

bool criterion4(std::string& note)
{
  FamilyParams sp;
  sp.s = Poly::var("s");
  sp.lambda = Poly::var("lambda");
  sp.p = Poly::var("p");
  sp.a = Poly::var("a");
  sp.d = Poly::var("d");
  for (Family f : all_families())
    for (int k = 0; k <= 8; ++k)
      if (!(umbral_construction(f, k, sp) ==
            classical(f, k, sp) * normalization(f, k, sp))) {
        note = std::string(family_name(f)) + " at k=" + std::to_string(k);
        return false;
      }
  // numeric meixner/krawtchouk spot values
  for (const char* pv : {"1/2", "1/3"}) {
    FamilyParams fp;
    fp.p = Poly(rat_from_string(pv));
    for (int k = 0; k <= 8; ++k) {
      if (!(umbral_construction(Family::meixner, k, fp) ==
            classical(Family::meixner, k, fp))) {
        note = std::string("meixner p=") + pv;
        return false;
      }
      if (!(umbral_construction(Family::krawtchouk, k, fp) ==
            classical(Family::krawtchouk, k, fp))) {
        note = std::string("krawtchouk p=") + pv;
        return false;
      }
    }
  }
  note = "9 families, symbolic parameters, k <= 8";
  return true;
}

bool criterion5(std::string& note)
{
  for (int n = 0; n <= 10; ++n)
    if (!(ks_recursive(n) == ks_umbral(n))) {
      note = "recursion != umbral at n=" + std::to_string(n);
      return false;
    }
  FamilyParams sp;
  sp.s = Poly::var("s");
  sp.lambda = Poly::var("lambda");
  sp.d = Poly::var("d");
  TshVars vars;
  for (int k = 0; k <= 6; ++k) {
    bool ok =
        ks_specialize(Family::hermite, k, sp) ==
            umbral_construction(Family::hermite, k, sp) &&
        ks_specialize(Family::poisson_charlier, k, sp) ==
            classical(Family::poisson_charlier, k, sp) &&
        ks_specialize(Family::laguerre, k, sp) == classical(Family::laguerre, k, sp) &&
        ks_specialize(Family::actuarial, k, sp) ==
            umbral_construction(Family::actuarial, k, sp) &&
        ks_specialize(Family::meixner, k, sp) ==
            umbral_construction(Family::meixner, k, sp);
    if (!ok) {
      note = "specialization mismatch at k=" + std::to_string(k);
      return false;
    }
  }
  note = "recursion = umbral to n = 10; five specializations to k = 6";
  return true;
}

bool criterion6(std::string& note)
{
  for (unsigned trial = 0; trial < 5; ++trial) {
    Umbra alpha = random_integer_umbra(501 + trial, 0, 2);
    Umbra base = random_integer_umbra(601 + trial, 0, 2);
    Umbra gamma = disjoint_sum(base, Umbra([base](int i) {
                                 return i == 1 ? Poly(1L) - base.moment(1) : Poly();
                               }));
    for (int k = 0; k <= 6; ++k)
      if (!(levy_sheffer(alpha, gamma, k) == levy_sheffer_combination(alpha, gamma, k))) {
        note = "pair " + std::to_string(trial) + " at k=" + std::to_string(k);
        return false;
      }
  }
  Umbra alpha0 = random_integer_umbra(711);
  for (int k = 0; k <= 6; ++k)
    if (!(levy_sheffer(dot(Poly(-1L), alpha0), singleton(), k) ==
          q_poly(alpha0, k).value)) {
      note = "gamma = chi reduction failed at k=" + std::to_string(k);
      return false;
    }
  FamilyParams sp;
  sp.s = Poly::var("s");
  sp.lambda = Poly::var("lambda");
  sp.d = Poly::var("d");
  for (Family f : {Family::hermite, Family::poisson_charlier, Family::laguerre,
                   Family::meixner})
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m < n; ++m)
        if (!orthogonality_check(f, n, m, sp).is_zero()) {
          note = std::string(family_name(f)) + " E[V" + std::to_string(n) + " V" +
                 std::to_string(m) + "] != 0";
          return false;
        }
  note = "5 random pairs k <= 6; chi reduction; orthogonality n != m <= 5";
  return true;
}

bool criterion7(std::string& note)
{
  const int order = 10;
  for (unsigned seed : {801u, 802u, 803u}) {
    auto m = random_integer_umbra(seed).moments(order);
    if (cumulants_to_moments(moments_to_cumulants(m)) != m) {
      note = "classical round trip";
      return false;
    }
    if (boolean_cumulants_to_moments(moments_to_boolean_cumulants(m)) != m) {
      note = "boolean round trip";
      return false;
    }
    if (free_cumulants_to_moments(moments_to_free_cumulants(m)) != m) {
      note = "free round trip";
      return false;
    }
  }
  Umbra a = random_integer_umbra(811), b = random_integer_umbra(821);
  Poly cc = Poly::var("c");
  Poly av = Poly::var("a");
  for (int n = 1; n <= 10; ++n) {
    if (!(cumulants(add(a, b)).moment(n) ==
          disjoint_sum(cumulants(a), cumulants(b)).moment(n))) {
      note = "additivity at n=" + std::to_string(n);
      return false;
    }
    if (!(cumulants(scale(cc, a)).moment(n) == scale(cc, cumulants(a)).moment(n))) {
      note = "homogeneity at n=" + std::to_string(n);
      return false;
    }
    Poly lhs = cumulants(add(a, scale(av, unity()))).moment(n);
    Poly rhs = cumulants(a).moment(n) + (n == 1 ? av : Poly());
    if (!(lhs == rhs)) {
      note = "semi-invariance at n=" + std::to_string(n);
      return false;
    }
  }
  note = "round trips to order 10; additivity, homogeneity, semi-invariance";
  return true;
}

bool criterion8(std::string& note)
{
  MultiUmbra mu(2, [](const MultiIndex& i) {
    Philox rng(901, static_cast<std::uint64_t>(i[0]) * 64 + i[1]);
    return Poly(static_cast<long>(rng.next_u32() % 5) - 2);
  });
  for (long n = 2; n <= 3; ++n) {
    MultiUmbra brute = mu;
    for (long j = 1; j < n; ++j)
      brute = add(brute, mu);
    MultiUmbra viadot = dot(Poly(n), mu);
    for (const auto& i : multi_indices_up_to(2, 4))
      if (!(brute.moment(i) == viadot.moment(i))) {
        note = "brute force n=" + std::to_string(n) + " at i=" + i.str();
        return false;
      }
  }
  Umbra alpha = random_integer_umbra(911);
  MultiUmbra uni(1, [alpha](const MultiIndex& i) { return alpha.moment(i[0]); });
  Poly t = Poly::var("t");
  for (int n = 0; n <= 8; ++n) {
    if (!(dot(t, uni).moment(MultiIndex{std::vector<int>{n}}) ==
          dot(t, alpha).moment(n))) {
      note = "d=1 dot degeneration at n=" + std::to_string(n);
      return false;
    }
    if (n >= 1 && !(cumulants_multi(uni).moment(MultiIndex{std::vector<int>{n}}) ==
                    cumulants(alpha).moment(n))) {
      note = "d=1 cumulant degeneration at n=" + std::to_string(n);
      return false;
    }
  }
  std::vector<std::vector<Poly>> cmat = {{Poly(1L), Poly()},
                                         {Poly(Rational(1, 2)), Poly(1L)}};
  std::array<MultiUmbra, 3> processes = {
      multi_family_process(MultiFamily::hermite, 2, cmat),
      multi_family_process(MultiFamily::bernoulli, 2),
      multi_family_process(MultiFamily::euler, 2),
  };
  for (const auto& proc : processes)
    for (const auto& i : multi_indices_up_to(2, 4))
      if (!martingale_check_multi(proc, i).ok) {
        note = "table-9 martingale at i=" + i.str();
        return false;
      }
  note = "brute force n=2,3 |i|<=4; d=1 order 8; table-9 martingales |i|<=4";
  return true;
}

bool criterion9(std::string& note)
{
  auto t0 = std::chrono::steady_clock::now();
  const long n = 1000000;
  const Rational ts(1, 2), t(1);
  std::array<ProcessSpec, 4> specs;
  specs[0].kind = ProcessSpec::Kind::brownian;
  specs[1].kind = ProcessSpec::Kind::poisson;
  specs[2].kind = ProcessSpec::Kind::gamma;
  specs[3].kind = ProcessSpec::Kind::pascal;
  for (auto& spec : specs) {
    SimReport rep = empirical_moments(spec, t, 4, n, 20250101);
    SimReport mart = martingale_mc(spec, 4, ts, t, 1000, 1000, 20250102);
    for (const auto& row : rep.moments)
      if (!(std::abs(row.z) <= 5.0)) {
        note = rep.process + " moment k=" + std::to_string(row.k) +
               " z=" + std::to_string(row.z);
        return false;
      }
    for (const auto& row : mart.martingale)
      if (!(std::abs(row.z) <= 5.0)) {
        note = rep.process + " martingale k=" + std::to_string(row.k) +
               " z=" + std::to_string(row.z);
        return false;
      }
    // determinism: identical seeds give identical bytes
    SimReport again = empirical_moments(spec, t, 4, n, 20250101);
    if (to_json(rep, 5.0) != to_json(again, 5.0)) {
      note = rep.process + " nondeterministic report";
      return false;
    }
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "4 processes, k <= 4, 10^6 paths each, |z| <= 5, " << dt << " s";
  note = os.str();
  return dt < 300.0;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args)
{
  std::string cmd = std::string(UMBRACAL_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe)
    return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool criterion10(std::string& note)
{
  struct Row {
    const char* args;
    const char* file;
  };
  const Row rows[] = {
      {"gen --family hermite --k 3 --format latex", "gen_hermite_k3.tex"},
      {"gen --family laguerre --k 2 --format json", "gen_laguerre_k2.json"},
      {"gen --family meixner --k 2 --p 1/2 --format json", "gen_meixner_k2.json"},
      {"gen --family bernoulli --k 0 --format json", "gen_bernoulli_k0.json"},
      {"gen --family hermite-multi --index 1,1 --format json",
       "gen_hermite_multi_11.json"},
      {"tables --suite uni --max-degree 2 --format csv", "tables_uni_k2.csv"},
  };
  for (const auto& row : rows) {
    RunResult r = run_cli(row.args);
    std::ifstream is(std::string(GOLDEN_DIR) + "/" + row.file, std::ios::binary);
    std::ostringstream want;
    want << is.rdbuf();
    if (r.exit_code != 0 || r.output != want.str()) {
      note = std::string("golden mismatch: ") + row.args;
      return false;
    }
  }
  if (run_cli("gen --family nope --k 1").exit_code != 2 ||
      run_cli("sim --process poisson --lambda 0 --n 10").exit_code != 2 ||
      run_cli("verify tsh --max-degree 2").exit_code != 0) {
    note = "exit-code contract";
    return false;
  }
  note = "6 golden commands byte-identical; exit codes 0/2 verified";
  return true;
}

} // namespace

int main()
{
  std::vector<Criterion> criteria = {
      {1, "dual-path TSH construction", criterion1},
      {2, "martingale identity", criterion2},
      {3, "Wald identity", criterion3},
      {4, "family equivalences", criterion4},
      {5, "Kailath-Segall", criterion5},
      {6, "Levy-Sheffer and orthogonality", criterion6},
      {7, "cumulant machinery", criterion7},
      {8, "multivariate engine", criterion8},
      {9, "simulation corroboration", criterion9},
      {10, "CLI golden files and exit codes", criterion10},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %2d (%s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.label.c_str(), note.empty() ? "" : ": ", note.c_str());
    std::fflush(stdout);
    if (!ok)
      ++failures;
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
