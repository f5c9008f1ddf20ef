// nchopf: verification suites, evolution curves, Dirac-string scans,
// Veronese residual tables and Chern integrals from the command line.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nchopf/commands.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Bad input maps to 2; a numerical failure while computing maps to 1.
bool is_usage_error(nchopf::ErrorKind k) {
  using K = nchopf::ErrorKind;
  switch (k) {
    case K::InvalidArgument:
    case K::InvalidModel:
    case K::NoSubspace:
    case K::OutsideDomain:
    case K::UnknownSuite:
    case K::ConfigInvalid:
    case K::IOFailure:
    case K::BandTooLarge:
    case K::DegreeTooHigh:
      return true;
    default:
      return false;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    nchopf::write_atomic(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator identities of the Jaynes-Cummings QDM, Veronese maps and spin representations"};
  app.require_subcommand(1);
  app.footer("Non-commutative spin representations are built for j = 1 and j = 3/2 only; no general\n"
             "construction of Phi_j(U) for j >= 2 is known, so none is offered.\n"
             "Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.");

  nchopf::VerifyConfig vcfg;
  std::vector<std::string> suites{"all"};
  std::string out, format = "json";
  auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
  verify->add_option("--suite", suites, "classical, jc, pseudo, veronese, representations, chern, all")
      ->delimiter(',');
  verify->add_option("--cutoff", vcfg.cutoff, "Fock cutoff M")->capture_default_str();
  verify->add_option("--band", vcfg.band, "validity band")->capture_default_str();
  verify->add_option("--tol", vcfg.tol, "tolerance for operator identities")->capture_default_str();
  verify->add_option("--seed", vcfg.seed, "seed for random samples")->capture_default_str();
  verify->add_option("--out", out, "output file (default stdout)");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  nchopf::EvolveSpec espec;
  bool pseudo_evolve = false;
  std::string initial = "up:0";
  auto* evolve = app.add_subcommand("evolve", "closed-form evolution curve as CSV");
  evolve->add_option("--theta", espec.theta, "detuning")->capture_default_str();
  evolve->add_option("--cutoff", espec.cutoff, "Fock cutoff M (JC only)")->capture_default_str();
  evolve->add_flag("--pseudo", pseudo_evolve, "use the pseudo (SU(1,1)) model");
  evolve->add_option("--initial", initial, "up:3, down:0, up:coherent:1.5+0.5i")->capture_default_str();
  evolve->add_option("--gt-start", espec.grid.start)->capture_default_str();
  evolve->add_option("--gt-stop", espec.grid.stop)->capture_default_str();
  evolve->add_option("--gt-points", espec.grid.points)->capture_default_str();
  evolve->add_option("--out", out, "output file (default stdout)");
  evolve->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));

  std::vector<double> thetas;
  double theta_min = -2.0, theta_max = 2.0;
  nchopf::Index theta_points = 40, cutoff = nchopf::kDefaultCutoff;
  auto* scan = app.add_subcommand("dirac-scan", "singular sets of the chart normalizers over a theta grid");
  scan->add_option("--theta", thetas, "explicit theta values")->delimiter(',');
  scan->add_option("--theta-min", theta_min)->capture_default_str();
  scan->add_option("--theta-max", theta_max)->capture_default_str();
  scan->add_option("--theta-points", theta_points)->capture_default_str();
  scan->add_option("--cutoff", cutoff)->capture_default_str();
  scan->add_option("--out", out, "output file (default stdout)");
  scan->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  nchopf::Index degree = 4, band = nchopf::kDefaultBand;
  bool pseudo_table = false;
  std::vector<double> vthetas;
  auto* veronese = app.add_subcommand("veronese", "Veronese normalization and idempotence residuals");
  veronese->add_option("--theta", vthetas, "theta values (default 0.5,1,2.5 or 1.5,2.2,3.1)")->delimiter(',');
  veronese->add_option("--degree", degree, "largest degree / depth")->capture_default_str();
  veronese->add_option("--cutoff", cutoff)->capture_default_str();
  veronese->add_option("--band", band)->capture_default_str();
  veronese->add_flag("--pseudo", pseudo_table, "pseudo Veronese columns");
  veronese->add_option("--out", out, "output file (default stdout)");
  veronese->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  nchopf::QuadratureConfig qcfg;
  nchopf::Index chern_degree = 3;
  auto* chern = app.add_subcommand("chern", "first Chern numbers of the pulled-back bundles");
  chern->add_option("--degree", chern_degree, "largest degree")->capture_default_str();
  chern->add_option("--tol", qcfg.target_tol, "quadrature target")->capture_default_str();
  chern->add_option("--out", out, "output file (default stdout)");
  chern->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      const nchopf::ReportDocument doc = nchopf::run_verify(suites, vcfg);
      emit(format == "csv" ? doc.to_csv() : doc.to_json().dump(2) + "\n", out);
      const nchopf::Summary s = doc.summary();
      std::cerr << s.passed << "/" << s.total << " checks passed\n";
      return s.failed == 0 ? 0 : kExitFail;
    }
    if (*evolve) {
      espec.kind = pseudo_evolve ? nchopf::ModelKind::pseudo : nchopf::ModelKind::jc;
      espec.initial = nchopf::parse_initial(initial);
      emit(nchopf::run_evolve(espec), out);
      return 0;
    }
    if (*scan) {
      if (thetas.empty()) thetas = nchopf::linspace(theta_min, theta_max, theta_points);
      bool ok = false;
      emit(nchopf::run_dirac_scan(thetas, cutoff, &ok).dump(2) + "\n", out);
      return ok ? 0 : kExitFail;
    }
    if (*veronese) {
      if (vthetas.empty()) vthetas = pseudo_table ? std::vector<double>{1.5, 2.2, 3.1} : std::vector<double>{0.5, 1.0, 2.5};
      emit(nchopf::veronese_table(vthetas, degree, cutoff, band, pseudo_table).dump(2) + "\n", out);
      return 0;
    }
    if (*chern) {
      bool ok = false;
      emit(nchopf::chern_table(chern_degree, qcfg, &ok).dump(2) + "\n", out);
      return ok ? 0 : kExitFail;
    }
  } catch (const nchopf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
