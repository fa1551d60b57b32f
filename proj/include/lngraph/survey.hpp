#ifndef LNGRAPH_SURVEY_HPP
#define LNGRAPH_SURVEY_HPP

#include <string>
#include <utility>
#include <vector>

namespace lngraph {

/// Aggregated result of a sweep (pancyclicity, hamilton connectivity,
/// negative claims, spectrum). `unknown` counts searches that ran out of
/// budget; an unknown case never counts as passed.
struct SurveyReport {
  std::string kind;
  int n = 0;
  long long total = 0;
  long long passed = 0;
  long long failed = 0;
  long long unknown = 0;
  long long elapsed_ms = 0;
  std::vector<std::string> failures;                       // capped
  std::vector<std::pair<std::string, std::string>> notes;  // kind-specific

  bool all_passed() const { return failed == 0 && unknown == 0; }

  void record_failure(const std::string& description);
};

/// Cap on retained failure descriptions; the counters stay exact.
inline constexpr int kMaxRecordedFailures = 25;

std::string to_text(const SurveyReport& report);

}  // namespace lngraph

#endif
