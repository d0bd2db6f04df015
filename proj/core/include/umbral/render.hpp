#ifndef UMBRAL_RENDER_HPP
#define UMBRAL_RENDER_HPP

#include <umbral/multivar.hpp>
#include <umbral/poly.hpp>
#include <umbral/simulate.hpp>

#include <optional>
#include <string>
#include <vector>

namespace umbral {

// One emitted polynomial with its provenance; round-trips losslessly through
// the JSON schema (rationals are "p" or "p/q" strings in lowest terms).
struct OutputRecord {
  std::string family;
  std::optional<int> degree;          // univariate families
  std::vector<int> index;             // multivariate families
  std::vector<std::pair<std::string, std::string>> params; // name -> exact value
  int truncation_order = 0;
  Poly polynomial;
};

std::string to_json(const OutputRecord& rec);
std::string to_json(const std::vector<OutputRecord>& recs);
std::string to_csv(const std::vector<OutputRecord>& recs);
std::string to_latex(const OutputRecord& rec);
std::string poly_to_latex(const Poly& p);

std::string to_json(const SimReport& rep, double threshold);
std::string to_csv(const SimReport& rep);

} // namespace umbral

#endif
