#pragma once

#include <string>
#include <vector>

namespace homtwist {

struct SuiteOptions {
  std::string filter;  // run only criteria whose name contains this substring
  int bounds = -1;     // overrides every degree/exponent bound when >= 0
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::vector<std::string> notes;  // witnesses and failure details
  double seconds = 0;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  double seconds = 0;
  bool passed() const;
};

/// Names of the acceptance criteria in order, e.g. "ttp_table".
const std::vector<std::string>& suite_criteria();

/// Runs the acceptance matrix. The oracle-closure criterion re-validates the
/// objects built by the construction criteria, running them silently when
/// they are filtered out.
SuiteResult paper_suite(const SuiteOptions& options = {});

/// One "PASS|FAIL <id> <name> (<seconds>s)" line per criterion; notes are
/// indented below when `verbose`.
std::string format_suite(const SuiteResult& result, bool verbose);

}  // namespace homtwist
