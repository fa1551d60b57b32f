#include "lngraph/survey.hpp"

#include <sstream>

namespace lngraph {

void SurveyReport::record_failure(const std::string& description) {
  if (static_cast<int>(failures.size()) < kMaxRecordedFailures) {
    failures.push_back(description);
  } else if (static_cast<int>(failures.size()) == kMaxRecordedFailures) {
    failures.push_back("...");
  }
}

std::string to_text(const SurveyReport& report) {
  std::ostringstream out;
  out << report.kind << " survey n=" << report.n << ": " << report.passed
      << "/" << report.total << " pass";
  if (report.failed > 0) out << ", " << report.failed << " fail";
  if (report.unknown > 0) out << ", " << report.unknown << " unknown";
  out << " (" << report.elapsed_ms << " ms)\n";
  for (const auto& [key, value] : report.notes) {
    out << "  " << key << ": " << value << "\n";
  }
  for (const auto& failure : report.failures) {
    out << "  FAIL " << failure << "\n";
  }
  return out.str();
}

}  // namespace lngraph
