#pragma once

// Jaynes-Cummings model and its quantum diagonalization: H_JC, the chart
// operators U_I / U_II, the transition operator, the projector P_JC, the
// quantum spectral decomposition and the closed-form evolution operator.
//
// All 2x2 operator matrices are BlockOperators with (component, Fock)
// ordering: component 0 is "up", component 1 is "down".

#include <string>
#include <vector>

#include "nchopf/classical.hpp"
#include "nchopf/fock.hpp"

namespace nchopf {

class DetunedModel {
 public:
  DetunedModel(double theta, FockSpace space);
  double theta() const noexcept { return theta_; }
  FockSpace space() const noexcept { return space_; }
  Index dim() const noexcept { return space_.dim(); }

 private:
  double theta_;
  FockSpace space_;
};

struct JCParams {
  double omega = 1.0;
  double delta = 1.0;
  double g = 0.1;

  void validate() const;
  double theta() const { return (delta - omega) / (2.0 * g); }
};

struct FullJC {
  BlockOperator h, h1, h2;
};

enum class Ordering { Left, Right };

struct QdmFactors {
  BlockOperator left, middle, right;
};

struct BasisState {
  int component = 0;  // 0 = up, 1 = down
  Index index = 0;
  bool operator==(const BasisState&) const = default;
};

struct DiracScanEntry {
  double theta = 0.0;
  Chart chart = Chart::I;
  std::vector<BasisState> singular;               // left-ordered (returned) form
  std::vector<BasisState> singular_right_ordered;  // right-ordered form
  std::vector<BasisState> expected;
  bool excited_clear = true;  // no singularity on states with index >= 1
  bool matches = false;       // singular == expected
};

struct DiracScanReport {
  Index dim = 0;
  std::vector<DiracScanEntry> entries;
  bool all_match() const;
};

/// e.g. sigma_3 (x) 1 etc: H = omega 1(x)N + (Delta/2) sigma_3(x)1 + g(sigma_+(x)a + sigma_-(x)a^dagger)
FullJC full_jc_hamiltonian(const JCParams& params, FockSpace space);

/// [[theta, a], [a^dagger, -theta]]
BlockOperator h_jc(const DetunedModel& model);

/// sqrt(N + shift + theta^2)
FockOperator r_op(const DetunedModel& model, Index shift);

/// R(N+shift) + theta and R(N+shift) - theta evaluated without cancellation:
/// the product of the two is N+shift, so the small one is (N+shift)/(large one).
/// Both vanish exactly (and only) at N+shift = 0 with the matching sign of theta.
Eigen::VectorXd r_plus_theta(const DetunedModel& model, Index shift);
Eigen::VectorXd r_minus_theta(const DetunedModel& model, Index shift);

QdmFactors qdm_factorization(const DetunedModel& model);

/// Left-ordered chart operator. Throws GroundSingularity when the chart's
/// normalizer vanishes on |0> (chart I with theta < 0, chart II with theta > 0).
BlockOperator u_chart(const DetunedModel& model, Chart chart);
BlockOperator u_chart(const DetunedModel& model, Chart chart, Ordering ordering);

/// Left-ordered chart operator with singular normalizer entries set to zero;
/// never throws. Agrees with u_chart wherever the chart is defined.
BlockOperator u_chart_clamped(const DetunedModel& model, Chart chart);

/// diag(R(N+1), -R(N)) for chart I, diag(R(N), -R(N+1)) for chart II.
BlockOperator chart_eigenvalues(const DetunedModel& model, Chart chart);

/// Basis states on which the chart normalizer vanishes.
std::vector<BasisState> chart_singular_set(const DetunedModel& model, Chart chart,
                                           Ordering ordering = Ordering::Left);

/// diag((N+1)^{-1/2} a, a^dagger (N+1)^{-1/2})
BlockOperator transition_phi_jc(FockSpace space);
/// diag(a N^{-1/2}, N^{-1/2} a^dagger) with N^{-1/2} clamped to 0 on |0>.
BlockOperator transition_phi_jc_inverse_sqrt_n(FockSpace space);

BlockOperator projector_p_jc(const DetunedModel& model, Ordering ordering = Ordering::Left);

/// Residual of diag(R(N+1),R(N)) P - diag(R(N+1),R(N)) (1 - P) against H_JC.
double spectral_decomposition(const DetunedModel& model, ValidityBand band = {});

/// exp(-i gt H_JC) in closed form.
BlockOperator evolution_closed(const DetunedModel& model, double gt);

DiracScanReport dirac_string_scan(const std::vector<double>& thetas, FockSpace space);

}  // namespace nchopf
