#include "homnambu/check_report.hpp"

namespace homnambu {

bool ReportBuilder::add(const CheckReport& part) {
  if (!report_.passed) return false;
  report_.tuples_checked += part.tuples_checked;
  report_.warnings.insert(report_.warnings.end(), part.warnings.begin(), part.warnings.end());
  if (!part.passed) {
    report_.passed = false;
    report_.counterexample = part.counterexample;
    if (report_.counterexample && part.identity != report_.identity) {
      auto& detail = report_.counterexample->detail;
      detail = detail.empty() ? part.identity : part.identity + ": " + detail;
    }
  }
  return report_.passed;
}

void ReportBuilder::fail(Counterexample cx) {
  if (!report_.passed) return;
  report_.passed = false;
  report_.counterexample = std::move(cx);
}

}  // namespace homnambu
