#include "nchopf/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <regex>

#include "nchopf/chern_geometry.hpp"
#include "nchopf/jc_qdm.hpp"
#include "nchopf/nc_veronese.hpp"
#include "nchopf/pseudo_qdm.hpp"

namespace nchopf {

ReportDocument run_verify(const std::vector<std::string>& suites, const VerifyConfig& cfg) {
  cfg.validate();
  const std::vector<std::string> names = resolve_suites(suites);
  std::vector<std::future<std::vector<CheckRecord>>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, cfg));

  ReportDocument doc;
  doc.seed = cfg.seed;
  doc.config = cfg.to_json();
  doc.config["suites"] = names;
  for (auto& j : jobs) {
    auto records = j.get();
    doc.checks.insert(doc.checks.end(), std::make_move_iterator(records.begin()),
                      std::make_move_iterator(records.end()));
  }
  return doc;
}

InitialState parse_initial(const std::string& spec) {
  static const std::regex basis(R"(^(up|down):(\d+)$)");
  static const std::regex coherent(R"(^(up|down):coherent:([-+]?[0-9.eE]+)(?:([-+][0-9.eE]+)i)?$)");
  std::smatch m;
  InitialState s;
  if (std::regex_match(spec, m, basis)) {
    s.component = m[1] == "up" ? 0 : 1;
    s.index = std::stol(m[2]);
    return s;
  }
  if (std::regex_match(spec, m, coherent)) {
    s.component = m[1] == "up" ? 0 : 1;
    s.coherent = Complex(std::stod(m[2]), m[3].matched ? std::stod(m[3]) : 0.0);
    return s;
  }
  throw Error(ErrorKind::ConfigInvalid, "initial state must look like up:0 or down:coherent:1.5+0.5i");
}

std::vector<double> linspace(double lo, double hi, Index points) {
  if (points < 1) throw Error(ErrorKind::ConfigInvalid, "grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorKind::ConfigInvalid, "grid bounds must be finite");
  std::vector<double> v(static_cast<std::size_t>(points));
  for (Index i = 0; i < points; ++i)
    v[static_cast<std::size_t>(i)] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  return v;
}

std::vector<double> GtGrid::values() const { return linspace(start, stop, points); }

namespace {

Vector component_state(Index dim, const InitialState& init) {
  Vector v = Vector::Zero(dim);
  if (init.coherent) {
    // Truncated coherent state, renormalized on the component.
    const Complex a = *init.coherent;
    Complex c = 1.0;
    for (Index k = 0; k < dim; ++k) {
      v(k) = c;
      c *= a / std::sqrt(static_cast<double>(k + 1));
    }
    v.normalize();
  } else {
    if (init.index < 0 || init.index >= dim)
      throw Error(ErrorKind::InvalidArgument, "initial Fock index outside the component space");
    v(init.index) = 1.0;
  }
  return v;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  for (double v : values) {
    if (!row.empty()) row += ',';
    row += format_double(v);
  }
  return row + '\n';
}

}  // namespace

std::string run_evolve(const EvolveSpec& spec) {
  const std::vector<double> grid = spec.grid.values();
  std::vector<Index> dims;
  std::function<BlockOperator(double)> evolve;
  std::string norm_label = "norm";
  if (spec.kind == ModelKind::jc) {
    const DetunedModel m(spec.theta, FockSpace(spec.cutoff));
    dims = {m.dim(), m.dim()};
    evolve = [m](double gt) { return evolution_closed(m, gt); };
  } else {
    const PseudoModel m(spec.theta);
    dims = m.dims();
    evolve = [m](double gt) { return evolution_closed_pseudo(m, gt); };
    norm_label = "pseudo_norm";
  }
  const Index up = dims[0], down = dims[1];
  Vector psi0 = Vector::Zero(up + down);
  const Index comp_dim = spec.initial.component == 0 ? up : down;
  psi0.segment(spec.initial.component == 0 ? 0 : up, comp_dim) = component_state(comp_dim, spec.initial);

  std::string out = "gt,pop_up,pop_down,inversion," + norm_label + "\n";
  for (double gt : grid) {
    const Vector psi = evolve(gt).dense() * psi0;
    const double pu = psi.head(up).squaredNorm(), pd = psi.tail(down).squaredNorm();
    const double norm = spec.kind == ModelKind::jc ? pu + pd : pu - pd;
    out += csv_row({gt, pu, pd, pu - pd, norm});
  }
  return out;
}

Json run_dirac_scan(const std::vector<double>& thetas, Index cutoff, bool* all_match) {
  if (thetas.empty()) throw Error(ErrorKind::ConfigInvalid, "theta grid is empty");
  for (double t : thetas)
    if (t == 0.0 || !std::isfinite(t)) throw Error(ErrorKind::ConfigInvalid, "theta grid must exclude 0");
  const DiracScanReport rep = dirac_string_scan(thetas, FockSpace(cutoff));
  auto states = [](const std::vector<BasisState>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back({{"component", s.component == 0 ? "up" : "down"}, {"index", s.index}});
    return a;
  };
  Json entries = Json::array();
  bool ok = true;
  for (const auto& e : rep.entries) {
    ok = ok && e.matches && e.excited_clear;
    entries.push_back({{"theta", e.theta},
                       {"chart", to_string(e.chart)},
                       {"singular", states(e.singular)},
                       {"singular_right_ordered", states(e.singular_right_ordered)},
                       {"expected", states(e.expected)},
                       {"excited_clear", e.excited_clear},
                       {"matches", e.matches}});
  }
  if (all_match) *all_match = ok;
  return {{"version", kReportVersion}, {"M", cutoff}, {"all_match", ok}, {"entries", entries}};
}

Json veronese_table(const std::vector<double>& thetas, Index max_degree, Index cutoff, Index band, bool pseudo) {
  if (max_degree < 1) throw Error(ErrorKind::ConfigInvalid, "degree must be at least 1");
  Json rows = Json::array();
  for (double th : thetas) {
    if (pseudo) {
      const PseudoModel m(th);
      const Index n = m.upper_dim();
      for (Index d = 1; d <= max_degree; ++d) {
        const OperatorColumn col = pseudo_veronese_column(m, d);
        const BlockOperator q = pseudo_veronese_projector(m, d);
        rows.push_back({{"theta", th},
                        {"level", m.level()},
                        {"depth", d},
                        {"pseudo_normalization", (col.pseudo_gram() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff()},
                        {"idempotence", max_abs_diff(q * q, q)}});
      }
      continue;
    }
    const DetunedModel m(th, FockSpace(cutoff));
    const Matrix id = Matrix::Identity(m.dim(), m.dim());
    const Matrix z0 = z_op(m, 0).matrix();
    for (Index n = 1; n <= max_degree; ++n) {
      const Index nb = std::max(band, n);
      const Window w{n, nb};
      const OperatorColumn col = veronese_column(m, n);
      const BlockOperator p = veronese_projector(m, n);
      Matrix power = id;
      for (Index k = 0; k < n; ++k) power = power * (id + z0.adjoint() * z0);
      const Matrix local = id + local_column(m, n).gram() - power;
      auto single = [](const Matrix& x) { return BlockOperator({x.rows()}, {x.cols()}, x); };
      rows.push_back({{"theta", th},
                      {"n", n},
                      {"M", cutoff},
                      {"band", nb},
                      {"normalization", interior_max(single(col.gram() - id), w)},
                      {"idempotence", interior_max(p * p - p, w)},
                      {"local_relation", interior_max(single(local), w)},
                      {"reconstruction", interior_max(veronese_from_local(m, n).to_block() - col.to_block(), w)}});
    }
  }
  return {{"version", kReportVersion}, {"kind", pseudo ? "pseudo" : "compact"}, {"rows", rows}};
}

Json chern_table(Index max_degree, const QuadratureConfig& cfg, bool* all_pass) {
  if (max_degree < 1) throw Error(ErrorKind::ConfigInvalid, "degree must be at least 1");
  cfg.validate();
  Json rows = Json::array();
  bool ok = true;
  for (Index n = 1; n <= max_degree; ++n) {
    const QuadratureResult r = chern_integral(n, cfg);
    const double residual = std::abs(r.value - static_cast<double>(n));
    const bool pass = residual < 1e-7;
    ok = ok && pass;
    rows.push_back({{"n", n},
                    {"value", r.value},
                    {"exact", n},
                    {"error_estimate", r.error},
                    {"subdivisions", r.subdivisions},
                    {"residual", residual},
                    {"pass", pass}});
  }
  if (all_pass) *all_pass = ok;
  return {{"version", kReportVersion}, {"rows", rows}};
}

}  // namespace nchopf
