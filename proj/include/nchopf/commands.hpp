#pragma once

// The batch commands behind the CLI. Each returns text or a report; the
// CLI decides where it goes.

#include <optional>
#include <string>
#include <vector>

#include "nchopf/quadrature.hpp"
#include "nchopf/report.hpp"
#include "nchopf/verify_suites.hpp"

namespace nchopf {

/// Suites run concurrently; records are assembled in suite order.
ReportDocument run_verify(const std::vector<std::string>& suites, const VerifyConfig& cfg);

enum class ModelKind { jc, pseudo };

struct InitialState {
  int component = 0;                 // 0 = up, 1 = down
  Index index = 0;                   // Fock index
  std::optional<Complex> coherent;   // coherent amplitude instead of |index>
};

/// Parses "up:3", "down:0", "up:coherent:1.5" or "up:coherent:1.5+0.5i".
InitialState parse_initial(const std::string& spec);

struct GtGrid {
  double start = 0.0, stop = 10.0;
  Index points = 101;
  std::vector<double> values() const;  // ConfigInvalid when points < 1
};

struct EvolveSpec {
  ModelKind kind = ModelKind::jc;
  double theta = 1.0;
  Index cutoff = kDefaultCutoff;  // jc only; the pseudo dims follow from theta
  InitialState initial;
  GtGrid grid;
};

/// CSV: gt, pop_up, pop_down, inversion, norm (pseudo-norm for pseudo).
std::string run_evolve(const EvolveSpec& spec);

/// JSON singular sets per (theta, chart). ConfigInvalid if theta = 0 appears.
Json run_dirac_scan(const std::vector<double>& thetas, Index cutoff, bool* all_match = nullptr);

/// Normalization / idempotence residual rows for degrees 1..max_degree.
Json veronese_table(const std::vector<double>& thetas, Index max_degree, Index cutoff, Index band,
                    bool pseudo);

/// Chern integrals for degrees 1..max_degree.
Json chern_table(Index max_degree, const QuadratureConfig& cfg, bool* all_pass = nullptr);

std::vector<double> linspace(double lo, double hi, Index points);

}  // namespace nchopf
