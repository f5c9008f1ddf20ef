#pragma once

// Pseudo-Hermitian (SU(1,1)) Jaynes-Cummings model on its admissible space
// F_n (+) F_{n+1}, n < theta^2 <= n+1. The ladder blocks are rectangular and
// close exactly on these dims, so no validity band is needed here.

#include "nchopf/fock.hpp"
#include "nchopf/jc_qdm.hpp"

namespace nchopf {

/// Unique n >= 1 with n < theta^2 <= n+1. NoSubspace when theta^2 <= 1.
Index admissible_level(double theta);

class PseudoModel {
 public:
  explicit PseudoModel(double theta);
  double theta() const noexcept { return theta_; }
  Index level() const noexcept { return level_; }
  Index upper_dim() const noexcept { return level_; }
  Index lower_dim() const noexcept { return level_ + 1; }
  std::vector<Index> dims() const { return {upper_dim(), lower_dim()}; }

 private:
  double theta_;
  Index level_;
};

/// sqrt(theta^2 - N - shift) on a component of the given dimension.
FockOperator s_op(const PseudoModel& model, Index shift, Index component_dim);

/// Ladder blocks a : F_{n+1} -> F_n and a^dagger : F_n -> F_{n+1}.
struct PseudoLadder {
  FockOperator a, ad;
};
PseudoLadder pseudo_ladder(const PseudoModel& model);

/// blockwise diag(1, -1) on F_n (+) F_{n+1}
BlockOperator pseudo_signature(const PseudoModel& model);

/// [[theta, a], [-a^dagger, -theta]]
BlockOperator h_pjc(const PseudoModel& model);

BlockOperator v_operator(const PseudoModel& model, Ordering ordering = Ordering::Left);
/// J V^dagger J
BlockOperator v_inverse(const PseudoModel& model);

/// diag(S(N+1), -S(N))
BlockOperator pseudo_eigenvalues(const PseudoModel& model);

/// max |H_pJC - V diag(S(N+1), -S(N)) V^{-1}| over the whole space.
double pseudo_factorization(const PseudoModel& model);

BlockOperator projector_q_pjc(const PseudoModel& model, Ordering ordering = Ordering::Left);

/// exp(-i gt H_pJC) in closed form.
BlockOperator evolution_closed_pseudo(const PseudoModel& model, double gt);

/// omega 1(x)N + (Delta/2) tau_3(x)1 + g(tau_+(x)a + tau_-(x)a^dagger) on a truncated space.
BlockOperator pseudo_full_hamiltonian(const JCParams& params, FockSpace space);

}  // namespace nchopf
