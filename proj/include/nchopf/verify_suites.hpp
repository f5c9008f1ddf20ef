#pragma once

// Verification suites: one per library module, each a list of named
// residual checks against pinned tolerances.

#include <cstdint>
#include <string>
#include <vector>

#include "nchopf/fock.hpp"
#include "nchopf/report.hpp"

namespace nchopf {

struct VerifyConfig {
  Index cutoff = kDefaultCutoff;
  Index band = kDefaultBand;
  double tol = kDefaultTolerance;  // operator identities; other checks pin their own
  std::uint64_t seed = 20240607;

  void validate() const;  // ConfigInvalid
  Json to_json() const;
};

/// classical, jc, pseudo, veronese, representations, chern (not "all").
const std::vector<std::string>& suite_names();

/// Expands "all", rejects unknown names (UnknownSuite), removes duplicates.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

std::vector<CheckRecord> run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace nchopf
