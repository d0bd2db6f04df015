// umbracal: exact TSH polynomial bases, classical families, identity
// verification and Monte-Carlo corroboration for Levy processes.

#include <umbral/families.hpp>
#include <umbral/kailath_segall.hpp>
#include <umbral/multivar.hpp>
#include <umbral/render.hpp>
#include <umbral/simulate.hpp>
#include <umbral/verification.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace umbral;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitStatistical = 3;

// a parameter is an exact rational ("1", "-3/4") or a symbol name ("lambda")
Poly parse_param(const std::string& text)
{
  if (text.empty())
    throw std::invalid_argument("empty parameter value");
  bool numeric = std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '-';
  if (numeric)
    return Poly(rat_from_string(text));
  for (char ch : text)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      throw std::invalid_argument("parameter '" + text + "' is neither rational nor a symbol");
  return Poly::var(text);
}

void emit(const std::string& payload, const std::string& out_path)
{
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os)
    throw std::runtime_error("cannot open output file '" + out_path + "'");
  os << payload;
}

std::vector<int> parse_index(const std::string& text)
{
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    idx.push_back(std::stoi(part));
  if (idx.empty())
    throw std::invalid_argument("empty multi-index");
  return idx;
}

std::vector<std::vector<Poly>> parse_matrix(const std::string& text)
{
  std::vector<std::vector<Poly>> m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<Poly> r;
    std::stringstream cols(row);
    std::string cell;
    while (std::getline(cols, cell, ','))
      r.push_back(Poly(rat_from_string(cell)));
    m.push_back(std::move(r));
  }
  return m;
}

struct GenOptions {
  std::string family;
  int k = -1;
  std::string index;
  std::string s = "1", lambda = "1", p = "1/2", a = "1", d;
  std::string chol;
  std::string format = "json";
  std::string out;
};

FamilyParams build_params(const GenOptions& o)
{
  FamilyParams fp;
  fp.s = parse_param(o.s);
  fp.lambda = parse_param(o.lambda);
  fp.p = parse_param(o.p);
  fp.a = parse_param(o.a);
  if (!o.d.empty())
    fp.d = parse_param(o.d);
  return fp;
}

OutputRecord make_uni_record(Family f, int k, const FamilyParams& fp,
                             const GenOptions& o)
{
  OutputRecord rec;
  rec.family = std::string(family_name(f));
  rec.degree = k;
  rec.truncation_order = std::max(k, 1);
  switch (f) {
  case Family::hermite:
    rec.params.emplace_back("s", o.s);
    break;
  case Family::poisson_charlier:
  case Family::actuarial:
    rec.params.emplace_back("lambda", o.lambda);
    break;
  case Family::meixner:
    if (!o.d.empty())
      rec.params.emplace_back("d", o.d);
    else
      rec.params.emplace_back("p", o.p);
    break;
  case Family::krawtchouk:
    rec.params.emplace_back("p", o.p);
    break;
  case Family::pseudo_narumi:
    rec.params.emplace_back("a", o.a);
    break;
  default:
    break;
  }
  rec.polynomial = umbral_construction(f, k, fp);
  return rec;
}

int run_gen(const GenOptions& o)
{
  std::vector<OutputRecord> recs;
  if (o.family == "hermite-multi" || o.family == "bernoulli-multi" ||
      o.family == "euler-multi") {
    if (o.index.empty())
      throw std::invalid_argument("multivariate families need --index i1,i2,...");
    auto idx = parse_index(o.index);
    MultiFamily mf = multi_family_from_name(o.family.substr(0, o.family.size() - 6));
    std::vector<std::vector<Poly>> cmat;
    if (!o.chol.empty())
      cmat = parse_matrix(o.chol);
    OutputRecord rec;
    rec.family = o.family;
    rec.index = idx;
    rec.truncation_order = std::max(1, MultiIndex{std::vector<int>(idx)}.total());
    if (!o.chol.empty())
      rec.params.emplace_back("chol", o.chol);
    rec.polynomial = family_multi(mf, MultiIndex{std::vector<int>(idx)}, cmat);
    recs.push_back(std::move(rec));
  } else {
    Family f = family_from_name(o.family);
    if (o.k < 0)
      throw std::invalid_argument("--k is required for univariate families");
    recs.push_back(make_uni_record(f, o.k, build_params(o), o));
  }

  std::string payload;
  if (o.format == "json")
    payload = recs.size() == 1 ? to_json(recs[0]) : to_json(recs);
  else if (o.format == "csv")
    payload = to_csv(recs);
  else if (o.format == "latex")
    payload = to_latex(recs[0]);
  else
    throw std::invalid_argument("unknown format '" + o.format + "'");
  emit(payload, o.out);
  return kExitOk;
}

int run_tables(const std::string& which, int max_degree, const std::string& format,
               const std::string& out)
{
  std::vector<OutputRecord> recs;
  if (which == "uni" || which == "all") {
    GenOptions defaults;
    for (Family f : all_families())
      for (int k = 0; k <= max_degree; ++k)
        recs.push_back(make_uni_record(f, k, build_params(defaults), defaults));
  }
  if (which == "multi" || which == "all") {
    for (auto mf : {MultiFamily::hermite, MultiFamily::bernoulli, MultiFamily::euler})
      for (const auto& i : multi_indices_up_to(2, std::max(0, max_degree))) {
        OutputRecord rec;
        switch (mf) {
        case MultiFamily::hermite:
          rec.family = "hermite-multi";
          break;
        case MultiFamily::bernoulli:
          rec.family = "bernoulli-multi";
          break;
        case MultiFamily::euler:
          rec.family = "euler-multi";
          break;
        }
        rec.index = i.entries();
        rec.truncation_order = std::max(1, i.total());
        rec.polynomial = family_multi(mf, i);
        recs.push_back(std::move(rec));
      }
  }
  if (!(which == "uni" || which == "multi" || which == "all"))
    throw std::invalid_argument("tables: --suite must be uni, multi or all");

  std::string payload;
  if (format == "json")
    payload = to_json(recs);
  else if (format == "csv")
    payload = to_csv(recs);
  else if (format == "latex") {
    std::ostringstream os;
    for (const auto& r : recs) {
      os << r.family;
      if (r.degree)
        os << " k=" << *r.degree;
      if (!r.index.empty()) {
        os << " i=(";
        for (std::size_t j = 0; j < r.index.size(); ++j)
          os << (j ? "," : "") << r.index[j];
        os << ")";
      }
      os << ": " << poly_to_latex(r.polynomial) << "\n";
    }
    payload = os.str();
  } else {
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  emit(payload, out);
  return kExitOk;
}

int run_verify(const std::string& suite, int max_degree, const std::string& format)
{
  auto outcomes = run_suite(suite_from_name(suite), max_degree);
  bool all_ok = true;
  for (const auto& o : outcomes)
    all_ok = all_ok && o.pass;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "umbracal/verify-v1";
    j["suite"] = suite;
    j["max_degree"] = max_degree;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& o : outcomes) {
      nlohmann::ordered_json row;
      row["name"] = o.name;
      row["pass"] = o.pass;
      if (!o.pass)
        row["witness"] = o.detail;
      checks.push_back(row);
    }
    j["checks"] = checks;
    j["pass"] = all_ok;
    std::cout << j.dump(2) << "\n";
    return all_ok ? kExitOk : kExitInternal;
  }
  if (format != "text")
    throw std::invalid_argument("verify: format must be text or json");
  for (const auto& o : outcomes) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << o.name << "\n";
    if (!o.pass) {
      std::istringstream lines(o.detail);
      std::string line;
      while (std::getline(lines, line))
        std::cout << "       " << line << "\n";
    }
  }
  std::cout << outcomes.size() << " checks, "
            << (all_ok ? "all passed" : "FAILURES above") << "\n";
  return all_ok ? kExitOk : kExitInternal;
}

struct SimOptions {
  std::string process = "brownian";
  std::string s = "1", lambda = "1", p = "1/2";
  std::string jump = "point", jump_a = "1", jump_b = "0";
  std::string t = "1", time_s = "1/2";
  int k = 4;
  long n = 1000000;
  long inner = 1000;
  std::uint64_t seed = 1;
  double threshold = 5.0;
  bool no_martingale = false;
  std::string format = "json";
  std::string out;
};

int run_sim(const SimOptions& o)
{
  ProcessSpec spec;
  spec.kind = ProcessSpec::kind_from_name(o.process);
  if (spec.kind == ProcessSpec::Kind::multivariate_brownian)
    throw std::invalid_argument(
        "sim: use the univariate kinds (multivariate joint moments are exact-only)");
  spec.s = rat_from_string(o.s);
  spec.lambda = rat_from_string(o.lambda);
  spec.p = rat_from_string(o.p);
  if (o.jump == "point")
    spec.jump.kind = JumpSpec::Kind::point;
  else if (o.jump == "uniform")
    spec.jump.kind = JumpSpec::Kind::uniform;
  else if (o.jump == "normal")
    spec.jump.kind = JumpSpec::Kind::normal;
  else if (o.jump == "exponential")
    spec.jump.kind = JumpSpec::Kind::exponential;
  else
    throw std::invalid_argument("unknown jump kind '" + o.jump + "'");
  spec.jump.a = rat_from_string(o.jump_a);
  spec.jump.b = rat_from_string(o.jump_b);
  spec.validate();

  Rational t = rat_from_string(o.t);
  Rational ts = rat_from_string(o.time_s);
  if (!(t > 0))
    throw std::invalid_argument("--t must be positive");

  SimReport rep = empirical_moments(spec, t, o.k, o.n, o.seed);
  rep.threshold = o.threshold;
  if (!o.no_martingale && ts > 0 && ts < t) {
    long n_outer = std::max(2L, o.n / std::max(1L, o.inner));
    SimReport mart = martingale_mc(spec, o.k, ts, t, n_outer, o.inner, o.seed + 1);
    rep.martingale = mart.martingale;
    rep.time_s = mart.time_s;
  }

  if (o.format != "csv" && o.format != "json")
    throw std::invalid_argument("unknown format '" + o.format + "'");
  std::string payload = o.format == "csv" ? to_csv(rep) : to_json(rep, o.threshold);
  emit(payload, o.out);
  return rep.pass() ? kExitOk : kExitStatistical;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact umbral calculus for time-space harmonic polynomials"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* cmd_gen = app.add_subcommand("gen", "emit one family polynomial");
  cmd_gen->add_option("--family", gen.family,
                      "hermite|bernoulli|euler|poisson-charlier|laguerre|actuarial|"
                      "meixner|krawtchouk|pseudo-narumi|hermite-multi|bernoulli-multi|"
                      "euler-multi")
      ->required();
  cmd_gen->add_option("--k", gen.k, "degree (univariate)");
  cmd_gen->add_option("--index", gen.index, "multi-index i1,i2,... (multivariate)");
  cmd_gen->add_option("--s", gen.s, "Gaussian scale (rational or symbol)");
  cmd_gen->add_option("--lambda", gen.lambda, "rate (rational or symbol)");
  cmd_gen->add_option("--p", gen.p, "success probability (rational or symbol)");
  cmd_gen->add_option("--a", gen.a, "pseudo-Narumi order (rational or symbol)");
  cmd_gen->add_option("--d", gen.d, "Pascal parameter p/q (overrides --p)");
  cmd_gen->add_option("--chol", gen.chol, "C matrix rows 'a,b;c,d' with Sigma = C C^T");
  cmd_gen->add_option("--format", gen.format, "json|csv|latex");
  cmd_gen->add_option("--out", gen.out, "output file (default stdout)");

  std::string tbl_suite = "uni", tbl_format = "json", tbl_out;
  int tbl_degree = 3;
  auto* cmd_tables = app.add_subcommand("tables", "emit the family catalogue");
  cmd_tables->add_option("--suite", tbl_suite, "uni|multi|all");
  cmd_tables->add_option("--max-degree", tbl_degree, "highest degree / total order");
  cmd_tables->add_option("--format", tbl_format, "json|csv|latex");
  cmd_tables->add_option("--out", tbl_out, "output file (default stdout)");

  std::string ver_suite = "all";
  std::string ver_format = "text";
  int ver_degree = 8;
  auto* cmd_verify = app.add_subcommand("verify", "run the identity suites");
  cmd_verify->add_option("suite", ver_suite, "umbral|tsh|families|ks|multivariate|all");
  cmd_verify->add_option("--max-degree", ver_degree, "degree ceiling");
  cmd_verify->add_option("--format", ver_format, "text|json");

  SimOptions sim;
  auto* cmd_sim = app.add_subcommand("sim", "Monte-Carlo corroboration");
  cmd_sim->add_option("--process", sim.process,
                      "brownian|poisson|gamma|pascal|compound-poisson");
  cmd_sim->add_option("--s", sim.s, "Brownian scale");
  cmd_sim->add_option("--lambda", sim.lambda, "rate");
  cmd_sim->add_option("--p", sim.p, "Pascal success probability");
  cmd_sim->add_option("--jump", sim.jump, "point|uniform|normal|exponential");
  cmd_sim->add_option("--jump-a", sim.jump_a, "jump parameter a");
  cmd_sim->add_option("--jump-b", sim.jump_b, "jump parameter b");
  cmd_sim->add_option("--t", sim.t, "time horizon (rational)");
  cmd_sim->add_option("--time-s", sim.time_s, "conditioning time for the martingale check");
  cmd_sim->add_option("--k", sim.k, "highest moment degree");
  cmd_sim->add_option("--n", sim.n, "sample count");
  cmd_sim->add_option("--inner", sim.inner, "inner samples per outer draw");
  cmd_sim->add_option("--seed", sim.seed, "RNG seed");
  cmd_sim->add_option("--threshold", sim.threshold, "|z| acceptance threshold");
  cmd_sim->add_flag("--no-martingale", sim.no_martingale, "skip the martingale check");
  cmd_sim->add_option("--format", sim.format, "json|csv");
  cmd_sim->add_option("--out", sim.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*cmd_gen)
      return run_gen(gen);
    if (*cmd_tables)
      return run_tables(tbl_suite, tbl_degree, tbl_format, tbl_out);
    if (*cmd_verify)
      return run_verify(ver_suite, ver_degree, ver_format);
    if (*cmd_sim)
      return run_sim(sim);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadArgs;
}
