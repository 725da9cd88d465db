#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homnambu/matrix.hpp"
#include "homnambu/multi_index.hpp"

namespace homnambu {

struct Counterexample {
  MultiIndex tuple;  // 0-based; serialized 1-based
  Vector left;
  Vector right;
  std::string detail;
};

struct CheckReport {
  std::string identity;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t tuples_checked = 0;
  std::vector<std::string> warnings;
};

struct CheckOptions {
  unsigned workers = 1;
  std::optional<std::uint64_t> max_tuples;
};

// Runs the parts in order and stops at the first failure.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string identity) { report_.identity = std::move(identity); }

  // Returns false once a failure has been recorded.
  bool add(const CheckReport& part);
  void warn(std::string message) { report_.warnings.push_back(std::move(message)); }
  void fail(Counterexample cx);
  bool passed() const { return report_.passed; }
  CheckReport finish() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace homnambu

#include "homnambu/error.hpp"

namespace homnambu {

// A construction's hypothesis failed; carries the failing check.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, CheckReport report) : Error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace homnambu
