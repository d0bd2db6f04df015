#include <umbral/render.hpp>

#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace umbral {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json poly_terms_json(const Poly& p)
{
  ordered_json terms = ordered_json::array();
  for (const auto& row : PolyRender::canonical_terms(p)) {
    ordered_json term;
    term["coeff"] = to_string(row.coeff);
    ordered_json mono = ordered_json::object();
    for (const auto& [name, e] : row.powers)
      mono[name] = e;
    term["monomial"] = mono;
    terms.push_back(term);
  }
  return terms;
}

ordered_json record_json(const OutputRecord& rec)
{
  ordered_json j;
  j["schema"] = "umbracal/polynomial-v1";
  j["family"] = rec.family;
  if (rec.degree)
    j["degree"] = *rec.degree;
  if (!rec.index.empty())
    j["index"] = rec.index;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : rec.params)
    params[k] = v;
  j["params"] = params;
  j["truncation_order"] = rec.truncation_order;
  j["terms"] = poly_terms_json(rec.polynomial);
  return j;
}

std::string monomial_compact(const std::vector<std::pair<std::string, int>>& powers)
{
  if (powers.empty())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, e] : powers) {
    if (!first)
      os << "*";
    first = false;
    os << name;
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

} // namespace

std::string to_json(const OutputRecord& rec)
{
  return record_json(rec).dump(2) + "\n";
}

std::string to_json(const std::vector<OutputRecord>& recs)
{
  ordered_json arr = ordered_json::array();
  for (const auto& r : recs)
    arr.push_back(record_json(r));
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<OutputRecord>& recs)
{
  std::ostringstream os;
  os << "family,degree,params,coeff,monomial\n";
  for (const auto& rec : recs) {
    std::string deg;
    if (rec.degree) {
      deg = std::to_string(*rec.degree);
    } else {
      std::ostringstream d;
      d << "(";
      for (std::size_t j = 0; j < rec.index.size(); ++j)
        d << (j ? ";" : "") << rec.index[j];
      d << ")";
      deg = d.str();
    }
    std::ostringstream ps;
    for (std::size_t j = 0; j < rec.params.size(); ++j)
      ps << (j ? ";" : "") << rec.params[j].first << "=" << rec.params[j].second;
    auto rows = PolyRender::canonical_terms(rec.polynomial);
    if (rows.empty())
      os << rec.family << "," << deg << "," << ps.str() << ",0,1\n";
    for (const auto& row : rows)
      os << rec.family << "," << deg << "," << ps.str() << "," << to_string(row.coeff)
         << "," << monomial_compact(row.powers) << "\n";
  }
  return os.str();
}

std::string poly_to_latex(const Poly& p)
{
  auto rows = PolyRender::canonical_terms(p);
  if (rows.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& row : rows) {
    Rational c = row.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0)
        c = -c;
    }
    first = false;
    auto coeff_tex = [&](const Rational& q) {
      if (q.get_den() == 1)
        return q.get_num().get_str();
      return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
    };
    if (row.powers.empty() || c != 1)
      os << coeff_tex(c);
    for (const auto& [name, e] : row.powers) {
      os << (name.size() > 1 ? "\\mathrm{" + name + "}" : name);
      if (e != 1)
        os << "^{" << e << "}";
    }
  }
  return os.str();
}

std::string to_latex(const OutputRecord& rec)
{
  return poly_to_latex(rec.polynomial) + "\n";
}

std::string to_json(const SimReport& rep, double threshold)
{
  ordered_json j;
  j["schema"] = "umbracal/sim-v1";
  j["process"] = rep.process;
  j["seed"] = rep.seed;
  j["n_samples"] = rep.n_samples;
  j["t"] = format_double(rep.t);
  if (!rep.martingale.empty())
    j["time_s"] = format_double(rep.time_s);
  j["threshold"] = format_double(threshold);
  ordered_json moments = ordered_json::array();
  for (const auto& row : rep.moments) {
    ordered_json r;
    r["k"] = row.k;
    r["exact"] = to_string(row.exact);
    r["empirical"] = format_double(row.empirical);
    r["std_error"] = format_double(row.std_error);
    r["z"] = format_double(row.z);
    moments.push_back(r);
  }
  j["moments"] = moments;
  ordered_json mart = ordered_json::array();
  for (const auto& row : rep.martingale) {
    ordered_json r;
    r["k"] = row.k;
    r["mean_residual"] = format_double(row.mean_residual);
    r["std_error"] = format_double(row.std_error);
    r["z"] = format_double(row.z);
    mart.push_back(r);
  }
  if (!rep.martingale.empty())
    j["martingale"] = mart;
  j["pass"] = rep.pass();
  return j.dump(2) + "\n";
}

std::string to_csv(const SimReport& rep)
{
  std::ostringstream os;
  os << "section,k,exact,empirical_or_residual,std_error,z\n";
  for (const auto& row : rep.moments)
    os << "moment," << row.k << "," << to_string(row.exact) << ","
       << format_double(row.empirical) << "," << format_double(row.std_error) << ","
       << format_double(row.z) << "\n";
  for (const auto& row : rep.martingale)
    os << "martingale," << row.k << ",0," << format_double(row.mean_residual) << ","
       << format_double(row.std_error) << "," << format_double(row.z) << "\n";
  return os.str();
}

} // namespace umbral
