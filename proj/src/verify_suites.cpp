#include "nchopf/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "nchopf/chern_geometry.hpp"
#include "nchopf/classical.hpp"
#include "nchopf/jc_qdm.hpp"
#include "nchopf/nc_veronese.hpp"
#include "nchopf/pseudo_qdm.hpp"
#include "nchopf/representations.hpp"

namespace nchopf {

namespace {

// Tolerances that the checks pin independently of --tol.
constexpr double kClassicalTol = 1e-12;
constexpr double kEvolutionTol = 1e-8;
constexpr double kNormTol = 1e-9;
constexpr double kColumnTol = 1e-9;
constexpr double kExactTol = 1e-12;
constexpr double kMomentTol = 1e-6;
constexpr double kChernTol = 1e-7;

class Sink {
 public:
  Sink(std::string suite, const VerifyConfig& cfg) : suite_(std::move(suite)), cfg_(cfg) {}

  void below(const std::string& name, Json params, double residual, double tol) {
    out_.push_back(CheckRecord::make(suite_, name, std::move(params), residual, tol));
  }
  void above(const std::string& name, Json params, double residual, double tol) {
    out_.push_back(CheckRecord::make(suite_, name, std::move(params), residual, tol, Direction::above));
  }
  /// Runs `f`; a thrown library error becomes a failing record instead of
  /// aborting the whole suite.
  void guard(const std::string& name, Json params, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      params["error"] = e.what();
      below(name, std::move(params), std::numeric_limits<double>::infinity(), 0.0);
    }
  }
  /// Params for band-restricted checks always carry M and band.
  Json banded(Json extra = Json::object(), Index first = 0) const {
    Json p = {{"M", cfg_.cutoff}, {"band", cfg_.band}, {"first", first}};
    for (auto& [k, v] : extra.items()) p[k] = v;
    return p;
  }

  std::vector<CheckRecord> take() { return std::move(out_); }

 private:
  std::string suite_;
  const VerifyConfig& cfg_;
  std::vector<CheckRecord> out_;
};

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double window(const Matrix& m, Index first, Index band) {
  return interior_max(BlockOperator({m.rows()}, {m.cols()}, m), Window{first, band});
}

std::mt19937_64 suite_rng(const VerifyConfig& cfg, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

Matrix2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector4d v(n(rng), n(rng), n(rng), n(rng));
  v.normalize();
  return su2_element(Complex(v(0), v(1)), Complex(v(2), v(3)));
}

Matrix2 random_su11(std::mt19937_64& rng, double max_rapidity) {
  std::uniform_real_distribution<double> r(0.0, max_rapidity), phase(0.0, 2.0 * std::numbers::pi);
  const double t = r(rng);
  return su11_element(std::polar(std::cosh(t), phase(rng)), std::polar(std::sinh(t), phase(rng)));
}

// ---------------------------------------------------------------------------

void classical_suite(Sink& s, const VerifyConfig& cfg) {
  auto rng = suite_rng(cfg, 1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Matrix2 j = signature2();

  double proj = 0, herm = 0, trace = 0, diag_i = 0, diag_ii = 0, conj = 0, trans = 0, group = 0, scale = 0;
  int samples = 0;
  while (samples < 1000) {
    const BerryPoint p{u(rng), u(rng), u(rng)};
    const double r = p.r();
    if (r <= 1e-6) continue;
    ++samples;
    const Matrix2 h = berry_hamiltonian(p), pr = berry_projector(p);
    proj = std::max(proj, max_abs(pr * pr - pr));
    herm = std::max(herm, max_abs(pr - pr.adjoint()));
    trace = std::max(trace, std::abs(pr.trace() - 1.0));
    const BerryPoint scaled{2.5 * p.x, 2.5 * p.y, 2.5 * p.z};
    scale = std::max(scale, max_abs(berry_projector(scaled) - pr));
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = r;
    d(1, 1) = -r;
    Matrix2 p0 = Matrix2::Zero();
    p0(0, 0) = 1.0;
    const Matrix2 ai = berry_diagonalizer(p, Chart::I), aii = berry_diagonalizer(p, Chart::II);
    diag_i = std::max(diag_i, max_abs(ai * d * ai.adjoint() - h));
    diag_ii = std::max(diag_ii, max_abs(aii * d * aii.adjoint() - h));
    conj = std::max({conj, max_abs(ai * p0 * ai.adjoint() - pr), max_abs(aii * p0 * aii.adjoint() - pr)});
    trans = std::max(trans, max_abs(ai * berry_transition(p) - aii));
    group = std::max({group, su2_defect(ai), su2_defect(aii)});
  }
  Json n = {{"samples", samples}};
  s.below("projector_idempotent", n, proj, kClassicalTol);
  s.below("projector_hermitian", n, herm, kClassicalTol);
  s.below("projector_trace", n, trace, kClassicalTol);
  s.below("projector_scale_invariant", n, scale, kClassicalTol);
  s.below("chart_I_diagonalizes", n, diag_i, kClassicalTol);
  s.below("chart_II_diagonalizes", n, diag_ii, kClassicalTol);
  s.below("projector_from_charts", n, conj, kClassicalTol);
  s.below("transition_A_II_eq_A_I_Phi", n, trans, kClassicalTol);
  s.below("charts_in_SU2", n, group, kClassicalTol);

  // Dirac strings: chart I must fail exactly on the closed negative z-axis,
  // chart II exactly on the positive one; both must work just off the axis.
  int mismatches = 0;
  auto throws = [](const BerryPoint& p, Chart c) {
    try {
      berry_diagonalizer(p, c);
      return false;
    } catch (const Error& e) {
      return e.kind() == ErrorKind::DiracString;
    }
  };
  for (double z : {-3.0, -1.0, -1e-3, 1e-3, 1.0, 3.0}) {
    const BerryPoint axis{0.0, 0.0, z}, near{1e-4, -2e-4, z};
    mismatches += throws(axis, Chart::I) != (z < 0);
    mismatches += throws(axis, Chart::II) != (z > 0);
    mismatches += throws(near, Chart::I) || throws(near, Chart::II);
  }
  s.below("dirac_string_sets", {{"points", 18}}, mismatches, 0.5);

  // Group exponentials.
  double g2 = 0, g11 = 0;
  for (int i = 0; i < 100; ++i) {
    const std::array<double, 3> x{2 * u(rng), 2 * u(rng), 2 * u(rng)};
    g2 = std::max(g2, su2_defect(group_exponential(x, Algebra::su2)));
    g11 = std::max(g11, su11_defect(group_exponential(x, Algebra::su11)));
  }
  s.below("su2_exponential_in_group", {{"samples", 100}}, g2, kClassicalTol);
  s.below("su11_exponential_in_group", {{"samples", 100}}, g11, 1e-10);

  // Pseudo model on D+ off the axis.
  double pj = 0, pdiag = 0, ptrans = 0, qq = 0, jqj = 0, qtr = 0;
  int count = 0;
  std::uniform_real_distribution<double> zdist(0.2, 2.0), frac(-0.65, 0.65);
  while (count < 1000) {
    const double z = zdist(rng);
    const BerryPoint p{frac(rng) * z, frac(rng) * z, z};
    if (pseudo_domain(p) != PseudoDomain::Dplus || p.rho2() < 1e-8) continue;
    ++count;
    const double sv = p.s();
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = sv;
    d(1, 1) = -sv;
    const Matrix2 bi = pseudo_diagonalizer(p, Chart::I), bii = pseudo_diagonalizer(p, Chart::II);
    pj = std::max({pj, max_abs(bi.adjoint() * j * bi - j), max_abs(bii.adjoint() * j * bii - j)});
    const Matrix2 h = pseudo_berry_hamiltonian(p);
    pdiag = std::max({pdiag, max_abs(bi * d * pseudo_inverse(bi) - h), max_abs(bii * d * pseudo_inverse(bii) - h)});
    ptrans = std::max(ptrans, max_abs(bii * pseudo_transition(p) - bi));
    const Matrix2 q = pseudo_projector(p);
    qq = std::max(qq, max_abs(q * q - q));
    jqj = std::max(jqj, max_abs(j * q * j - q.adjoint()));
    qtr = std::max(qtr, std::abs(q.trace() - 1.0));
  }
  Json pn = {{"samples", count}};
  s.below("pseudo_charts_in_SU11", pn, pj, kClassicalTol);
  s.below("pseudo_charts_diagonalize", pn, pdiag, kClassicalTol);
  s.below("pseudo_transition_B_I_eq_B_II_Phi", pn, ptrans, kClassicalTol);
  s.below("pseudo_projector_idempotent", pn, qq, kClassicalTol);
  s.below("pseudo_projector_JQJ_eq_Qdagger", pn, jqj, kClassicalTol);
  s.below("pseudo_projector_trace", pn, qtr, kClassicalTol);
}

// ---------------------------------------------------------------------------

void jc_suite(Sink& s, const VerifyConfig& cfg) {
  const FockSpace space(cfg.cutoff);
  const Index b = cfg.band;
  for (double th : {0.3, 1.0, 2.5, -0.3, -1.0, -2.5}) {
    const DetunedModel m(th, space);
    const Chart c = th > 0 ? Chart::I : Chart::II;
    const Json p = s.banded({{"theta", th}, {"chart", to_string(c)}});
    s.guard("qdm_diagonalization", p, [&] {
      const BlockOperator u = u_chart(m, c), d = chart_eigenvalues(m, c), h = h_jc(m);
      const BlockOperator id = BlockOperator::identity(u.row_dims());
      s.below("qdm_diagonalization", p, interior_residual(u * d * u.adjoint(), h, {0, b}), cfg.tol);
      s.below("chart_unitary", p, interior_residual(u.adjoint() * u, id, {0, b}), cfg.tol);
      s.below("chart_coisometry", p, interior_residual(u * u.adjoint(), id, {0, b}), cfg.tol);
      s.below("chart_orderings_agree", p, interior_residual(u_chart(m, c, Ordering::Right), u, {0, b}), cfg.tol);
    });
    // Both charts exist away from the ground state of the singular component.
    const Json pt = s.banded({{"theta", th}}, 1);
    s.guard("transition_U_II_eq_U_I_Phi", pt, [&] {
      const BlockOperator ui = u_chart_clamped(m, Chart::I), uii = u_chart_clamped(m, Chart::II);
      s.below("transition_U_II_eq_U_I_Phi", pt, interior_residual(ui * transition_phi_jc(space), uii, {1, b}),
              cfg.tol);
    });
    s.guard("qdm_factorization", pt, [&] {
      const QdmFactors f = qdm_factorization(m);
      const BlockOperator diff = f.left * f.middle * f.right - h_jc(m);
      s.below("qdm_factorization", pt, interior_max(diff, {1, b}), cfg.tol);
      // The factorization misses the lower ground state by exactly theta.
      const Index row = diff.row_offset(1);
      s.below("qdm_factorization_ground_defect", {{"theta", th}},
              std::abs(std::abs(diff.dense()(row, row)) - std::abs(th)), kExactTol);
    });
    s.guard("spectral_decomposition", p, [&] {
      s.below("spectral_decomposition", p, spectral_decomposition(m, ValidityBand{b}), cfg.tol);
      const BlockOperator pr = projector_p_jc(m);
      s.below("projector_idempotent", p, interior_residual(pr * pr, pr, {0, b}), cfg.tol);
      s.below("projector_hermitian", p, interior_residual(pr, pr.adjoint(), {0, b}), cfg.tol);
      s.below("projector_orderings_agree", p,
              interior_residual(projector_p_jc(m, Ordering::Right), pr, {0, b}), cfg.tol);
    });
  }

  for (double th : {0.5, -0.5, 2.0, -2.0}) {
    const DetunedModel m(th, space);
    const BlockOperator h = h_jc(m);
    for (double gt : {0.1, 1.0, 5.0, 20.0}) {
      const Json p = s.banded({{"theta", th}, {"gt", gt}});
      const BlockOperator e = evolution_closed(m, gt);
      s.below("evolution_vs_eigendecomposition", p, interior_residual(e, reference_exponential(h, gt, true), {0, b}),
              kEvolutionTol);
      s.below("evolution_unitary", p,
              interior_residual(e.adjoint() * e, BlockOperator::identity(e.row_dims()), {0, b}), kNormTol);
    }
  }

  std::vector<double> grid;
  for (int i = 0; i < 40; ++i) grid.push_back(-2.0 + 4.0 * (i + 0.5) / 40.0);
  const DiracScanReport scan = dirac_string_scan(grid, space);
  int bad = 0;
  for (const auto& e : scan.entries) bad += !e.matches || !e.excited_clear;
  s.below("ground_state_dirac_strings", {{"M", cfg.cutoff}, {"grid_points", 40}}, bad, 0.5);
}

// ---------------------------------------------------------------------------

void pseudo_suite(Sink& s, const VerifyConfig& cfg) {
  for (double th : {1.5, 2.2, 3.1, 9.5}) {
    const PseudoModel m(th);
    const Json p = {{"theta", th}, {"level", m.level()}};
    const BlockOperator v = v_operator(m), j = pseudo_signature(m), vi = v_inverse(m), h = h_pjc(m),
                        q = projector_q_pjc(m), id = BlockOperator::identity(m.dims());
    s.below("V_pseudo_unitary", p, max_abs_diff(v.adjoint() * j * v, j), kExactTol);
    s.below("V_inverse", p, max_abs_diff(v * vi, id), kExactTol);
    s.below("V_orderings_agree", p, max_abs_diff(v_operator(m, Ordering::Right), v), kExactTol);
    s.below("H_pseudo_hermitian", p, max_abs_diff(j * h * j, h.adjoint()), kExactTol);
    s.below("pseudo_factorization", p, pseudo_factorization(m), kExactTol);
    s.below("Q_idempotent", p, max_abs_diff(q * q, q), kExactTol);
    s.below("JQJ_eq_Qdagger", p, max_abs_diff(j * q * j, q.adjoint()), kExactTol);
    s.below("Q_orderings_agree", p, max_abs_diff(projector_q_pjc(m, Ordering::Right), q), kExactTol);
    double evo = 0, eje = 0;
    for (double gt : {0.1, 1.0, 5.0, 20.0}) {
      const BlockOperator e = evolution_closed_pseudo(m, gt);
      evo = std::max(evo, max_abs_diff(e, reference_exponential(h, gt, false)));
      eje = std::max(eje, max_abs_diff(e.adjoint() * j * e, j));
    }
    s.below("evolution_vs_series", p, evo, cfg.tol);
    s.below("evolution_pseudo_unitary", p, eje, cfg.tol);
  }

  s.below("admissible_level_1.5", {{"theta", 1.5}}, std::abs(admissible_level(1.5) - 2.0), 0.5);
  int missing = 0;
  for (double th : {1.0, 0.5, -1.0, -3.0}) {
    try {
      admissible_level(th);
      ++missing;
    } catch (const Error&) {
    }
  }
  s.below("admissible_level_rejects", {{"thetas", "1,0.5,-1,-3"}}, missing, 0.5);
}

// ---------------------------------------------------------------------------

void veronese_suite(Sink& s, const VerifyConfig& cfg) {
  const FockSpace space(cfg.cutoff);
  const Index b = cfg.band;
  auto rng = suite_rng(cfg, 4);
  for (double th : {0.5, 1.0, 2.5}) {
    const DetunedModel m(th, space);
    const Index dim = m.dim();
    const Matrix id = Matrix::Identity(dim, dim);
    for (Index jj = 0; jj <= 4; ++jj) {
      const Json p = s.banded({{"theta", th}, {"j", jj}}, jj);
      const Matrix x = x_op(m, jj).matrix(), y = y_op(m, jj).matrix();
      s.below("X2_plus_YdY", p, window(x * x + y.adjoint() * y - id, jj, b), cfg.tol);
      if (jj >= 1) {
        const Matrix yp = y_op(m, jj - 1).matrix();
        s.below("YdY_eq_shifted_YYd", p, window(y.adjoint() * y - yp * yp.adjoint(), jj, b), cfg.tol);
      }
    }
    double shift = 0;
    for (Index jj = 0; jj <= 3; ++jj)
      for (Index k = 0; k <= 3; ++k) {
        const Matrix lhs = y_op(m, jj).matrix() * diagonal_inverse(x_op(m, k)).matrix();
        const Matrix rhs = diagonal_inverse(x_op(m, k + 1)).matrix() * y_op(m, jj).matrix();
        shift = std::max(shift, window(lhs - rhs, std::max(jj, k), b));
      }
    s.below("shift_commutation", s.banded({{"theta", th}}, 3), shift, kExactTol);

    const Matrix z0 = z_op(m, 0).matrix();
    s.below("Z0_orderings_agree", s.banded({{"theta", th}}),
            window(z0 - z0_right_form(m).matrix(), 0, b), 1e-13);
    const Matrix x0 = x_op(m, 0).matrix(), y0 = y_op(m, 0).matrix();
    s.below("Z0_eq_Y0_X0inv", s.banded({{"theta", th}}),
            window(y0 * diagonal_inverse(x_op(m, 0)).matrix() - z0, 0, b), kExactTol);
    s.below("one_plus_ZdZ_eq_X0_inv2", s.banded({{"theta", th}}),
            window(id + z0.adjoint() * z0 - diagonal_power(x_op(m, 0), -2.0).matrix(), 0, b), 1e-10);
    s.below("sphere_normalized", s.banded({{"theta", th}}), window(sphere_column(m).gram() - id, 0, b), cfg.tol);

    for (Index n = 1; n <= 4; ++n) {
      // n raising operators corrupt the top n basis states.
      const Index nb = std::max(b, n);
      Json p = s.banded({{"theta", th}, {"n", n}}, n);
      p["band"] = nb;
      const OperatorColumn col = veronese_column(m, n);
      const BlockOperator pr = veronese_projector(m, n);
      s.below("A_n_normalized", p, window(col.gram() - id, n, nb), kColumnTol);
      s.below("P_n_idempotent", p, interior_max(pr * pr - pr, {n, nb}), kColumnTol);
      s.below("P_n_hermitian", p, interior_max(pr - pr.adjoint(), {n, nb}), kColumnTol);
      const OperatorColumn zc = local_column(m, n);
      Matrix base = id + z0.adjoint() * z0, power = id;
      for (Index k = 0; k < n; ++k) power = power * base;
      s.below("local_relation", p, window(id + zc.gram() - power, n, nb), kColumnTol);
      s.below("A_n_from_local", p,
              interior_max(veronese_from_local(m, n).to_block() - col.to_block(), {n, nb}), kColumnTol);
    }
    const BlockOperator oike = oike_projector(z0, b), pjc = projector_p_jc(m);
    s.below("oike_eq_P_JC", s.banded({{"theta", th}}), interior_residual(oike, pjc, {0, b}), kColumnTol);
    s.below("oike_idempotent", s.banded({{"theta", th}}), interior_residual(oike * oike, oike, {0, b}),
            kColumnTol);
  }

  // Classical limit of the local coordinate: ratio of the chart-I column.
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double limit = 0;
  for (int i = 0; i < 100; ++i) {
    const BerryPoint p{u(rng), u(rng), u(rng) + 1.5};
    const Matrix2 a = berry_diagonalizer(p, Chart::I);
    limit = std::max(limit, std::abs(z_symbol(p) - a(1, 0) / a(0, 0)));
  }
  s.below("classical_limit_Z", {{"samples", 100}}, limit, kExactTol);

  for (double th : {1.5, 2.2, 3.1}) {
    const PseudoModel m(th);
    const Index n = m.upper_dim();
    for (Index jj = 0; jj <= 3; ++jj) {
      const Matrix g = gamma_op(m, jj).matrix(), om = omega_op(m, jj).matrix();
      // Joint domain: Omega_{-j} starts at index j (its row factor vanishes below).
      const Matrix d = g * g - om.adjoint() * om - Matrix::Identity(g.rows(), g.cols());
      s.below("Gamma2_minus_OmegadOmega", {{"theta", th}, {"j", jj}, {"first", jj}},
              max_abs(d.bottomRightCorner(d.rows() - jj, d.cols() - jj)), cfg.tol);
    }
    for (Index d = 1; d <= 4; ++d) {
      const Json p = {{"theta", th}, {"depth", d}};
      const OperatorColumn col = pseudo_veronese_column(m, d);
      const BlockOperator q = pseudo_veronese_projector(m, d), jn = column_signature(col);
      s.below("B_n_pseudo_normalized", p, max_abs(col.pseudo_gram() - Matrix::Identity(n, n)), cfg.tol);
      s.below("Q_n_idempotent", p, max_abs_diff(q * q, q), cfg.tol);
      s.below("JQJ_n_eq_Qdagger", p, max_abs_diff(jn * q * jn, q.adjoint()), kColumnTol);
    }
    s.below("Q_1_eq_Q_pJC", {{"theta", th}}, max_abs_diff(pseudo_veronese_projector(m, 1), projector_q_pjc(m)),
            kExactTol);
    double rise = 0, prev = std::numeric_limits<double>::infinity();
    for (Index depth = 0; depth <= 6; ++depth) {
      const double defect = max_abs(Matrix::Identity(n, n) - bhat_column(m, 2, depth).gram());
      rise = std::max(rise, defect - prev);
      prev = defect;
    }
    s.below("bhat_defect_nonincreasing", {{"theta", th}, {"two_j", 2}}, std::max(rise, 0.0), kExactTol);
  }
}

// ---------------------------------------------------------------------------

void representations_suite(Sink& s, const VerifyConfig& cfg) {
  auto rng = suite_rng(cfg, 5);
  for (Index tj = 1; tj <= 3; ++tj) {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const Matrix2 a = random_su2(rng);
      worst = std::max(worst, max_abs(spin_rep_su2(tj, a) - spin_rep_closed(tj, a)));
    }
    s.below("closed_form", {{"two_j", tj}}, worst, kExactTol);
  }
  for (Index tj = 1; tj <= 5; ++tj) {
    double hom = 0, uni = 0, det = 0;
    for (int i = 0; i < 100; ++i) {
      const Matrix2 a = random_su2(rng), bm = random_su2(rng);
      const Matrix pa = spin_rep_su2(tj, a);
      hom = std::max(hom, max_abs(spin_rep_su2(tj, a * bm) - pa * spin_rep_su2(tj, bm)));
      uni = std::max(uni, max_abs(pa.adjoint() * pa - Matrix::Identity(tj + 1, tj + 1)));
      det = std::max(det, std::abs(pa.determinant() - 1.0));
    }
    s.below("homomorphism", {{"two_j", tj}, {"pairs", 100}}, hom, cfg.tol);
    s.below("unitary", {{"two_j", tj}, {"pairs", 100}}, uni, cfg.tol);
    s.below("determinant_one", {{"two_j", tj}, {"pairs", 100}}, det, 1e-8);
  }

  const FockSpace space(cfg.cutoff);
  for (double th : {1.0, 2.5}) {
    const DetunedModel m(th, space);
    const BlockOperator f1 = nc_phi_one(m), f3 = nc_phi_three_half(m);
    const Index dim = m.dim();
    const Index b2 = std::max<Index>(cfg.band, 2), b3 = std::max<Index>(cfg.band, 3);
    auto pr = [&](Index first, Index band) {
      Json p = s.banded({{"theta", th}}, first);
      p["band"] = band;
      return p;
    };
    const BlockOperator i3 = BlockOperator::identity(f1.row_dims()), i4 = BlockOperator::identity(f3.row_dims());
    s.below("Phi_1_unitary", pr(2, b2), interior_residual(f1.adjoint() * f1, i3, {2, b2}), kColumnTol);
    s.below("Phi_1_coisometry", pr(2, b2), interior_residual(f1 * f1.adjoint(), i3, {2, b2}), kColumnTol);
    s.below("Phi_3/2_unitary", pr(3, b3), interior_residual(f3.adjoint() * f3, i4, {3, b3}), kColumnTol);
    s.below("Phi_3/2_coisometry", pr(3, b3), interior_residual(f3 * f3.adjoint(), i4, {3, b3}), kColumnTol);
    const OperatorColumn a2 = veronese_column(m, 2), a3 = veronese_column(m, 3);
    double c2 = 0, c3 = 0;
    for (Index k = 0; k < 3; ++k) c2 = std::max(c2, window(f1.block(k, 0) - a2.entries[k], 2, b2));
    for (Index k = 0; k < 4; ++k) c3 = std::max(c3, window(f3.block(k, 0) - a3.entries[k], 3, b3));
    s.below("Phi_1_first_column_eq_A_2", pr(2, b2), c2, kExactTol);
    s.below("Phi_3/2_first_column_eq_A_3", pr(3, b3), c3, kExactTol);
    const Matrix zero = Matrix::Zero(dim, dim), one = Matrix::Identity(dim, dim);
    const BlockOperator e1 = BlockOperator::diagonal({one, zero, zero}),
                        e3 = BlockOperator::diagonal({one, zero, zero, zero});
    s.below("Phi_1_projector_eq_P_2", pr(2, b2),
            interior_residual(f1 * e1 * f1.adjoint(), veronese_projector(m, 2), {2, b2}), kColumnTol);
    s.below("Phi_3/2_projector_eq_P_3", pr(3, b3),
            interior_residual(f3 * e3 * f3.adjoint(), veronese_projector(m, 3), {3, b3}), kColumnTol);
  }

  for (Index tj = 2; tj <= 4; ++tj) {
    double defect = 0, first = 0;
    Index cutoff = 0;
    for (int i = 0; i < 10; ++i) {
      const Matrix2 bm = random_su11(rng, 0.8);
      const CutoffChoice c = su11_auto_cutoff(tj, bm);
      defect = std::max(defect, c.defect);
      cutoff = std::max(cutoff, c.cutoff);
      // Column 0 against (alpha^{-2j}, -sqrt(2j) beta alpha^{-2j-1}, ...).
      const Vector col = su11_column(tj, bm, 0, 8);
      const Complex al = bm(0, 0), be = -bm(1, 0);  // bm = [[alpha, -conj(beta)], [-beta, conj(alpha)]]
      for (Index k = 0; k < 8; ++k) {
        const Complex want = std::sqrt(pochhammer_ratio(static_cast<double>(tj), k)) * std::pow(-be, static_cast<int>(k)) *
                             std::pow(al, -static_cast<int>(tj + k));
        first = std::max(first, std::abs(col(k) - want));
      }
    }
    s.below("su11_column0_norm_defect", {{"two_j", tj}, {"max_cutoff", cutoff}}, defect, 1e-8);
    s.below("su11_column0_closed_form", {{"two_j", tj}}, first, kExactTol);
    const Matrix2 bm = random_su11(rng, 0.5);
    const Matrix r = su11_rep(tj, bm, 256);
    s.below("su11_columns_orthonormal", {{"two_j", tj}, {"cutoff", 256}, {"columns", 4}},
            max_abs(r.leftCols(4).adjoint() * r.leftCols(4) - Matrix::Identity(4, 4)), 1e-8);
  }

  for (int fold : {2, 3}) {
    const Eigen::MatrixXd t = clebsch_T(fold);
    s.below("clebsch_T_orthogonal", {{"fold", fold}},
            (t.transpose() * t - Eigen::MatrixXd::Identity(t.rows(), t.cols())).cwiseAbs().maxCoeff(), 1e-14);
    double worst = 0;
    for (int i = 0; i < 50; ++i) worst = std::max(worst, tensor_decomposition_su2(random_su2(rng), fold));
    s.below("su2_tensor_decomposition", {{"fold", fold}, {"samples", 50}}, worst, kExactTol);
  }

  const double o32 = nc_tensor_obstruction(DetunedModel(1.0, FockSpace(32)));
  const double o64 = nc_tensor_obstruction(DetunedModel(1.0, FockSpace(64)));
  const double o10 = nc_tensor_obstruction(DetunedModel(10.0, FockSpace(32)));
  s.above("nc_obstruction_nonzero", {{"theta", 1.0}, {"M", 32}, {"band", 2}, {"first", 2}}, o32, 1e-6);
  s.below("nc_obstruction_stable_M64", {{"theta", 1.0}, {"M_pair", "32,64"}}, std::abs(o64 - o32) / o32, 0.1);
  s.above("nc_obstruction_nonzero_theta10", {{"theta", 10.0}, {"M", 32}}, o10, 1e-6);
  s.below("nc_obstruction_decreases_with_theta", {{"theta_pair", "1,10"}}, o10 - o32, 0.0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double scalar = 0;
  for (int i = 0; i < 20; ++i) {
    const BerryPoint p{u(rng), u(rng), u(rng) + 1.5};
    scalar = std::max(scalar, nc_tensor_obstruction_scalar(p));
  }
  s.below("commuting_obstruction_vanishes", {{"samples", 20}}, scalar, kExactTol);

  double cworst = 0, nworst = 0;
  for (Index tj = 1; tj <= 6; ++tj)
    for (Index k = 0; k <= 6; ++k)
      for (Index l = 0; l <= 6; ++l) {
        if (k <= tj && l <= tj) {
          const MomentValue mv = compact_moment(tj, k, l);
          cworst = std::max(cworst, std::abs(mv.value - mv.exact));
        }
        if (tj >= 2) {
          const MomentValue mv = noncompact_moment(tj, k, l);
          nworst = std::max(nworst, std::abs(mv.value - mv.exact));
        }
      }
  s.below("compact_moments", {{"max_two_j", 6}, {"max_degree", 6}}, cworst, kMomentTol);
  s.below("noncompact_moments", {{"max_two_j", 6}, {"max_degree", 6}}, nworst, kMomentTol);
  s.below("compact_moment_j1_k1", {{"two_j", 2}, {"k", 1}}, std::abs(compact_moment(2, 1, 1).value - 0.5),
          kMomentTol);
  s.below("noncompact_moment_j1_k2", {{"two_j", 2}, {"k", 2}},
          std::abs(noncompact_moment(2, 2, 2).value - 1.0 / 3.0), kMomentTol);

  auto ip = [&](const char* name, std::vector<Complex> f, std::vector<Complex> g, Index tj, InnerProductKind kind,
                double want) {
    const InnerProduct r = inner_product(f, g, tj, kind);
    s.below(name, {{"two_j", tj}},
            std::max({std::abs(r.closed - want), std::abs(r.quadrature - want), std::abs(r.closed - r.quadrature)}),
            kMomentTol);
  };
  ip("inner_product_compact_constant", {1.0}, {1.0}, 2, InnerProductKind::compact, 1.0);
  ip("inner_product_noncompact_constant", {1.0}, {1.0}, 2, InnerProductKind::noncompact, 1.0);
  ip("inner_product_compact_sqrt2_z", {0.0, std::sqrt(2.0)}, {0.0, std::sqrt(2.0)}, 2, InnerProductKind::compact,
     1.0);
  ip("inner_product_noncompact_z", {0.0, 1.0}, {0.0, 1.0}, 2, InnerProductKind::noncompact, 0.5);
}

// ---------------------------------------------------------------------------

void chern_suite(Sink& s, const VerifyConfig&) {
  for (Index n : {1, 2, 3}) s.below("chern_number", {{"n", n}}, std::abs(chern_number(n) - n), kChernTol);

  double ratio = 0;
  for (Index n = 1; n <= 5; ++n)
    for (int i = 0; i < 10; ++i)
      for (int k = 0; k < 10; ++k) {
        const Complex z(-2.0 + 4.0 * (i + 0.5) / 10.0, -2.0 + 4.0 * (k + 0.5) / 10.0);
        ratio = std::max(ratio, std::abs(pullback_connection_coefficient(z, n) / connection_coefficient(z) -
                                         static_cast<double>(n)));
      }
  s.below("pullback_connection_ratio", {{"grid", 100}, {"max_n", 5}}, ratio, 1e-9);

  double cp = 0;
  for (Index n = 1; n <= 4; ++n) {
    Eigen::Vector2cd v(Complex(0.6, 0.1), Complex(-0.3, 0.5));
    v.normalize();
    const Eigen::VectorXcd w = classical_veronese(v, n);
    const Matrix p = cp_projector(w, n);
    cp = std::max({cp, std::abs(w.squaredNorm() - 1.0), max_abs(p * p - p), max_abs(p - p.adjoint()),
                   std::abs(p.trace() - 1.0)});
  }
  s.below("cp_projector_laws", {{"max_n", 4}}, cp, kExactTol);

  const Eigen::Vector2cd h(std::cosh(0.3), std::sinh(0.3));
  const Eigen::VectorXcd w = classical_pseudo_veronese(h, 2);
  const Matrix q = cq_projector(w, 2);
  Eigen::VectorXd sg(3);
  sg << 1, -1, 1;
  const Matrix jn = sg.cast<Complex>().asDiagonal();
  s.below("cq_projector_laws", {{"n", 2}},
          std::max({max_abs(q * q - q), max_abs(jn * q * jn - q.adjoint()), std::abs(q.trace() - 1.0)}), kExactTol);
}

using SuiteFn = void (*)(Sink&, const VerifyConfig&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"classical", classical_suite}, {"jc", jc_suite},
      {"pseudo", pseudo_suite},       {"veronese", veronese_suite},
      {"representations", representations_suite}, {"chern", chern_suite}};
  return r;
}

}  // namespace

void VerifyConfig::validate() const {
  if (cutoff < 8) throw Error(ErrorKind::ConfigInvalid, "cutoff must be at least 8");
  if (band < 0 || band + 4 >= cutoff) throw Error(ErrorKind::ConfigInvalid, "band must leave an interior");
  if (!(tol > 0) || !std::isfinite(tol)) throw Error(ErrorKind::ConfigInvalid, "tol must be positive");
}

Json VerifyConfig::to_json() const { return {{"cutoff", cutoff}, {"band", band}, {"tol", tol}}; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"classical", "jc",       "pseudo",
                                                 "veronese",  "representations", "chern"};
  return names;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  auto add = [&](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  for (const auto& r : requested) {
    if (r == "all") {
      for (const auto& n : suite_names()) add(n);
    } else if (registry().count(r)) {
      add(r);
    } else {
      throw Error(ErrorKind::UnknownSuite, "unknown suite '" + r + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::UnknownSuite, "no suite selected");
  return out;
}

std::vector<CheckRecord> run_suite(const std::string& name, const VerifyConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
  cfg.validate();
  Sink sink(name, cfg);
  it->second(sink, cfg);
  return sink.take();
}

}  // namespace nchopf
