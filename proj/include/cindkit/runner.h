#pragma once

#include "cindkit/report.h"

#include <iosfwd>
#include <string>
#include <vector>

namespace cindkit {

struct RunConfig {
  std::string command;          // two-word form, e.g. "sc check"
  std::string format = "text";  // text | json | csv
  std::string output;           // report path; stdout when empty
  unsigned jobs = 0;            // 0 = CINDKIT_JOBS or hardware count
  unsigned seed = 2026;
  int n = 102;
  int L = 3;
  int k_max = 3;
  std::string lambda = "1/6";
  std::string instance;
  std::string inner;  // second instance for the cocycle chain rule
  std::string theta;
  std::string set;  // elements separated by top-level commas
  std::string word;
  std::string aut;
  std::string relators;  // relator file; empty = automorphism orbit of w0
  bool exclude_identity = false;
  std::vector<int> claims;  // empty = all nine
  std::string grid;         // comma-separated rationals
  bool weakmix = false;
  long long K = 16;
  std::string candidate;
  int samples = 1000;
};

struct RunOutcome {
  int exit_code = 0;  // 0 pass, 1 violation found, 2 usage error
  RunReport report;
  std::string text;
};

// Dispatches cfg.command. Throws std::invalid_argument for malformed
// configs; instance refusals surface as std::runtime_error. Progress for
// long runs goes to *err when given.
RunOutcome execute(const RunConfig& cfg, std::ostream* err = nullptr);

// execute() plus rendering to out / cfg.output; converts exceptions into
// exit code 2 with a message on err.
int run_and_emit(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cindkit
