#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sieveforge/carrier.hpp"

namespace sieveforge {

struct LawOptions {
  std::uint64_t seed = 42;
  int random_locales = 100;
  int random_categories = 50;
  int max_locale_elements = 6;
  int max_category_elements = 5;
  int subtopology_pairs = 200;
  int basis_samples = 500;
  long long boolean_max = 200;
  std::size_t budget = kDefaultBudget;
};

/// Outcome of one executable law over its corpus. A law with violations is
/// a falsification record, the witnesses are replayable data.
struct LawResult {
  std::string law;
  long long checked = 0;
  long long violation_count = 0;
  std::vector<std::string> violations;  // capped sample of witnesses

  bool pass() const { return violation_count == 0; }
};

std::vector<std::string> law_names();

/// Runs one named law; throws UnknownLaw for unrecognized names.
LawResult run_law(const std::string& name, const LawOptions& options);

/// The whole corpus in a fixed order.
std::vector<LawResult> run_law_corpus(const LawOptions& options);

}  // namespace sieveforge
