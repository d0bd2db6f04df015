#ifndef UMBRAL_VERIFICATION_HPP
#define UMBRAL_VERIFICATION_HPP

#include <umbral/umbra.hpp>

#include <string>
#include <vector>

namespace umbral {

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail; // witness on failure
};

enum class Suite { umbral, tsh, families, ks, multivariate, all };

Suite suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

// Runs every identity of the suite up to the requested degree; each outcome
// is one named pass/fail line. max_degree = 0 runs the trivial instances.
std::vector<CheckOutcome> run_suite(Suite s, int max_degree);

// deterministic small-integer moment umbra for property checks
Umbra random_integer_umbra(std::uint64_t seed, long lo = -3, long hi = 3);

} // namespace umbral

#endif
