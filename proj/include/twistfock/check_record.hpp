#pragma once

// Shared result records: every verification suite emits one record per
// checked instance, carrying the residual as data when it fails.

#include <chrono>
#include <string>
#include <vector>

#include "twistfock/algebra_kind.hpp"

namespace twistfock {

struct CheckRecord {
  std::string id;
  std::vector<int> indices;
  bool pass{false};
  std::string residual;  // empty when passing
  double ms{0.0};
};

struct Report {
  AlgebraKind kind;
  std::vector<CheckRecord> records;

  int pass_count() const {
    int c = 0;
    for (const auto& r : records) c += r.pass;
    return c;
  }
  int fail_count() const { return static_cast<int>(records.size()) - pass_count(); }
  bool all_pass() const { return fail_count() == 0; }
};

namespace detail {
class Stopwatch {
public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto dt = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

private:
  std::chrono::steady_clock::time_point t0_;
};
}  // namespace detail

}  // namespace twistfock
