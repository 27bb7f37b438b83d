// The cross-route verification suite: twelve numbered criteria, each a
// self-contained exact or tolerance check over a fixed grid.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qschubert/qposet.hpp"

namespace qschubert {

struct CriterionResult {
  CriterionResult() = default;
  CriterionResult(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

  int id = 0;
  std::string title;
  bool pass = true;
  long checks = 0;
  std::vector<std::string> failures;  // first few offending cases
  std::vector<std::string> notes;     // sub-results worth reporting either way

  void expect(bool ok, const std::string& what);
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  long max_poset_size = 5000;
  long max_subsets = 100000;
};

/// Grid of the degree criteria: 2 <= m+p <= 7, 1 <= p <= m, 0 <= q <= 3,
/// restricted to posets of at most `max_poset_size` elements.
std::vector<PosetContext> verification_grid(long max_poset_size = 5000);

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const VerifyOptions& options = {});
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyOptions& options = {});

}  // namespace qschubert
