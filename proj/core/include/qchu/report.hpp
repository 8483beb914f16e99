#pragma once

#include <string>
#include <vector>

#include "qchu/check.hpp"

namespace qchu {

/// Aggregated outcome of a verification run. The summary passes when no
/// assertive check failed; REPORT-mode discrepancies are listed separately
/// and surface through their own exit code.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void add(const std::vector<CheckResult>& cs) {
    checks.insert(checks.end(), cs.begin(), cs.end());
  }

  bool summary_pass() const;
  bool has_discrepancies() const;

  /// 0 all pass, 1 check failure, 3 only REPORT-mode discrepancies.
  int exit_code() const;

  std::string render() const;
};

}  // namespace qchu
