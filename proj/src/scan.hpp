#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "homnambu/check_report.hpp"
#include "homnambu/error.hpp"

namespace homnambu::detail {

inline void enforce_limit(std::uint64_t count, const CheckOptions& options) {
  if (options.max_tuples && count > *options.max_tuples) {
    throw TupleLimitError("check needs " + std::to_string(count) + " tuples, above the limit of " +
                          std::to_string(*options.max_tuples));
  }
}

// Evaluates cases 0..count-1 and reports the lowest failing case. With
// several workers the cases are split into contiguous blocks; a worker stops
// once a lower failure is known, so the merged report equals the serial one.
template <class Eval>
CheckReport scan(std::string identity, std::uint64_t count, const CheckOptions& options, Eval&& eval) {
  enforce_limit(count, options);
  CheckReport report;
  report.identity = std::move(identity);
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.workers, count));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < count; ++c) {
      if (auto cx = eval(c)) {
        report.passed = false;
        report.counterexample = std::move(*cx);
        report.tuples_checked = c + 1;
        return report;
      }
    }
    report.tuples_checked = count;
    return report;
  }
  std::atomic<std::uint64_t> first_fail{count};
  std::vector<std::optional<Counterexample>> found(workers);
  std::vector<std::uint64_t> found_at(workers, count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::uint64_t block = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::uint64_t lo = w * block;
        const std::uint64_t hi = std::min(count, lo + block);
        for (std::uint64_t c = lo; c < hi; ++c) {
          if (c >= first_fail.load(std::memory_order_relaxed)) return;
          if (auto cx = eval(c)) {
            found[w] = std::move(cx);
            found_at[w] = c;
            std::uint64_t prev = first_fail.load();
            while (c < prev && !first_fail.compare_exchange_weak(prev, c)) {
            }
            return;
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  const std::uint64_t fail = first_fail.load();
  if (fail == count) {
    report.tuples_checked = count;
    return report;
  }
  for (std::uint64_t w = 0; w < workers; ++w) {
    if (found_at[w] == fail) report.counterexample = std::move(found[w]);
  }
  report.passed = false;
  report.tuples_checked = fail + 1;
  return report;
}

}  // namespace homnambu::detail
