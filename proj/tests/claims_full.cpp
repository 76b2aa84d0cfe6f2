// Full-scale run of the nine cancellation claims at n=102, L=3, exponents up
// to 3, pinned to the expected pair counts so a silently shrunk scan fails.
#include "cindkit/family.h"

#include <iostream>
#include <map>

using namespace cindkit;

int main() {
  const std::map<int, long long> expected_pairs = {
      {1, 1800}, {2, 8704}, {3, 22720}, {4, 3584}, {5, 25088},
      {6, 2304}, {7, 2304}, {8, 16384}, {9, 6144},
  };

  int failures = 0;
  std::vector<ClaimReport> reports = run_claims(102, 3, 3, 0);
  if (reports.size() != 9) {
    std::cout << "expected nine claim reports, got " << reports.size() << std::endl;
    return 1;
  }
  for (const ClaimReport& rep : reports) {
    long long want = expected_pairs.at(rep.claim_id);
    bool pass = rep.violations.empty() && rep.pairs_checked == want;
    std::cout << "claim " << rep.claim_id << ": " << (pass ? "PASS" : "FAIL")
              << "  pairs=" << rep.pairs_checked << "/" << want
              << " violations=" << rep.violations.size() << std::endl;
    for (std::size_t i = 0; i < rep.violations.size() && i < 3; ++i) {
      const ClaimViolation& v = rep.violations[i];
      std::cout << "    " << v.x << " vs " << v.y << " rho=" << v.rho
                << " sigma=" << v.sigma << " piece=" << v.piece << " ratio=" << v.ratio
                << (v.detail.empty() ? "" : "  " + v.detail) << std::endl;
    }
    if (!pass) ++failures;
  }

  for (const SignTableReport& r : verify_sign_tables(102, 3)) {
    bool pass = r.cells_checked == 96 && r.mismatches.empty();
    std::cout << "sign table " << r.claim_id << ": " << (pass ? "PASS" : "FAIL")
              << "  cells=" << r.cells_checked << " mismatches=" << r.mismatches.size()
              << std::endl;
    if (!pass) ++failures;
  }

  return failures == 0 ? 0 : 1;
}
