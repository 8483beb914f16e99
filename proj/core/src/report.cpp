#include "qchu/report.hpp"

#include <sstream>

namespace qchu {

bool Report::summary_pass() const {
  for (const auto& c : checks)
    if (!c.report_mode && c.verdict == Verdict::Fail) return false;
  return true;
}

bool Report::has_discrepancies() const {
  for (const auto& c : checks)
    if (c.report_mode && c.verdict == Verdict::Fail) return true;
  return false;
}

int Report::exit_code() const {
  if (!summary_pass()) return 1;
  if (has_discrepancies()) return 3;
  return 0;
}

std::string Report::render() const {
  std::ostringstream out;
  out << "== " << title << "\n";
  for (const auto& c : checks) {
    const char* tag = "PASS";
    if (c.verdict == Verdict::TrivialFinite)
      tag = "TRIV";
    else if (c.report_mode)
      tag = c.verdict == Verdict::Fail ? "RPT!" : "RPT+";
    else if (c.verdict == Verdict::Fail)
      tag = "FAIL";
    out << "[" << tag << "] " << axiom_name(c.id);
    if (!c.witness.empty()) {
      out << "  witness=(";
      for (std::size_t i = 0; i < c.witness.size(); ++i)
        out << (i ? "," : "") << c.witness[i];
      out << ")";
    }
    if (!c.detail.empty()) out << "  -- " << c.detail;
    out << "\n";
  }
  out << "summary: "
      << (!summary_pass() ? "FAIL"
                          : has_discrepancies() ? "PASS-WITH-DISCREPANCIES" : "PASS")
      << "\n";
  return out.str();
}

}  // namespace qchu
