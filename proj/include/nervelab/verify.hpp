#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/covers.hpp"
#include "nervelab/io.hpp"

namespace nervelab {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  /// What the check is about, or "plumbing".
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
  int exit_code() const { return all_passed() ? 0 : 1; }

  Json to_json() const;
  std::string to_text() const;
};

/// Thrown by run_suite for an unknown suite name.
class UnknownSuiteError : public Error {
 public:
  using Error::Error;
};

struct SuiteConfig {
  /// Restrict corpus loops to corpus_small() and skip the random instances
  /// of the star-cover suite.
  bool small = false;
  std::uint64_t seed = 20240611;
  std::size_t max_facets = kDefaultMaxFacets;
  int random_complexes = 200;
  int random_subcomplexes = 20;
  int intersection_pairs = 100;
  std::size_t tietze_budget = 10'000;
};

/// Suite names in the order "all" runs them.
const std::vector<std::string>& suite_names();

VerificationReport run_suite(const std::string& name, const SuiteConfig& config = {});

/// Single-input variants used by the CLI.
VerificationReport verify_star_cover(const SimplicialComplex& k,
                                     std::size_t max_facets = kDefaultMaxFacets);
VerificationReport verify_cover_nerve_theorem(const SubcomplexCover& cover);
VerificationReport verify_representation(const SimplicialComplex& k, const SimplicialComplex& m,
                                         std::size_t max_facets = kDefaultMaxFacets);

}  // namespace nervelab
