#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace taugrav {

struct OracleCheck {
  std::string name;
  double measured;   // the discrepancy actually observed
  double threshold;  // pass when measured <= threshold
  bool pass;
};

struct VerifyOptions {
  std::uint64_t seed = 20260823;
  std::size_t mc_samples = 2000000;
};

// Runs every independent-oracle cross-check (quadrature vs closed forms,
// Monte Carlo vs the gain-variance closed form, binomial vs Gaussian
// envelope, reduction lattice, curvature, root-finding) and reports the
// measured discrepancies.
std::vector<OracleCheck> run_verification(const VerifyOptions& opts = {});

std::string verification_report(const std::vector<OracleCheck>& checks);
bool all_pass(const std::vector<OracleCheck>& checks);

}  // namespace taugrav
