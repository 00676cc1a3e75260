#include "qentro/cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qentro/density.hpp"
#include "qentro/state_io.hpp"
#include "qentro/sweep.hpp"
#include "qentro/thermal.hpp"

namespace qentro {

namespace {

// 0 success, 1 the input failed a check, 2 the input could not be used.
int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DimensionShrink:
    case ErrorKind::DimensionNotFactorizable:
    case ErrorKind::OverflowRisk:
    case ErrorKind::SparsityViolated:
      return 2;
    default:
      return 1;
  }
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

int run_validate(const std::string& path, double tol, bool fix,
                 std::ostream& out) {
  StateFileDocument doc = load_state_document(path);
  ComplexMatrix m = doc.to_matrix();

  DensityDiagnostics diag = probe_density(m);
  out << "hermiticity residual = " << format_number(diag.hermiticity) << "\n";
  out << "trace deviation = " << format_number(diag.trace_deviation) << "\n";
  out << "min eigenvalue = " << format_number(diag.min_eigenvalue) << "\n";

  ValidatedDensity v = validate_density(m, tol, fix);
  if (fix) {
    out << "repair distance = " << format_number(v.repair_distance) << "\n";
    out << "repaired state:\n";
    StateFileDocument repaired =
        StateFileDocument::from_matrix(v.state.matrix(), doc.label);
    out << state_document_to_json(repaired).dump(2) << "\n";
  } else {
    out << "valid = yes\n";
  }
  return 0;
}

nlohmann::ordered_json subadditivity_to_json(const SubadditivityReport& r) {
  nlohmann::ordered_json j;
  j["S"] = r.entropy;
  j["S1"] = r.entropy1;
  j["S2"] = r.entropy2;
  j["rhs"] = r.rhs;
  j["iq"] = r.iq;
  j["margin"] = r.margin;
  j["holds"] = r.holds;
  return j;
}

nlohmann::ordered_json thermal_to_json(const ThermalBoundReport& r,
                                       const std::string& label) {
  nlohmann::ordered_json j;
  j["beta"] = r.beta;
  j["beta_label"] = label;
  j["S"] = r.entropy;
  j["mean_energy"] = r.mean_energy;
  j["log_z"] = r.log_z;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  if (std::isfinite(r.relative_entropy_to_gibbs))
    j["relative_entropy_to_gibbs"] = r.relative_entropy_to_gibbs;
  else
    j["relative_entropy_to_gibbs"] = nullptr;  // +infinity
  j["holds"] = r.holds;
  return j;
}

int run_report(const std::string& state_path, const std::string& ham_path,
               const std::string& beta_csv, bool as_json, std::ostream& out) {
  StateFileDocument state_doc = load_state_document(state_path);
  DensityMatrix rho = validate_density(state_doc.to_matrix()).state;

  SubadditivityReport sub = subadditivity_report(rho);
  bool all_hold = sub.holds;

  std::vector<BetaValue> betas;
  std::vector<ThermalBoundReport> thermal;
  if (!ham_path.empty()) {
    StateFileDocument ham_doc = load_state_document(ham_path);
    if (ham_doc.dim != rho.dim())
      throw Error(ErrorKind::DimensionMismatch,
                  "state dim " + std::to_string(rho.dim()) +
                      " vs hamiltonian dim " + std::to_string(ham_doc.dim));
    Hamiltonian h = Hamiltonian::validate(ham_doc.to_matrix());
    betas = parse_beta_list(beta_csv);
    thermal.reserve(betas.size());
    for (const BetaValue& beta : betas) {
      thermal.push_back(entropy_energy_report(rho, h, beta.value));
      all_hold = all_hold && thermal.back().holds;
    }
  }

  // Which upper bound on S is tighter: the portrait one or the best beta.
  std::size_t best = 0;
  for (std::size_t k = 1; k < thermal.size(); ++k)
    if (thermal[k].rhs < thermal[best].rhs) best = k;
  const bool thermal_tighter =
      !thermal.empty() && thermal[best].rhs < sub.rhs;

  if (as_json) {
    nlohmann::ordered_json j;
    j["state"] = state_document_to_json(
        StateFileDocument::from_matrix(rho.matrix(), state_doc.label));
    j["subadditivity"] = subadditivity_to_json(sub);
    if (!thermal.empty()) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < thermal.size(); ++k)
        arr.push_back(thermal_to_json(thermal[k], betas[k].label));
      j["thermal"] = std::move(arr);
      j["tighter_bound"] = thermal_tighter
                               ? "thermal beta=" + betas[best].label
                               : std::string("portrait");
    }
    out << j.dump(2) << "\n";
  } else {
    out << "state " << state_path << ": dim " << rho.dim();
    if (!state_doc.label.empty()) out << " (" << state_doc.label << ")";
    out << "\n";
    out << "S = " << format_number(sub.entropy) << "\n";
    out << "portrait: S1 = " << format_number(sub.entropy1)
        << "  S2 = " << format_number(sub.entropy2)
        << "  rhs = " << format_number(sub.rhs)
        << "  Iq = " << format_number(sub.iq)
        << "  holds = " << yes_no(sub.holds) << "\n";
    for (std::size_t k = 0; k < thermal.size(); ++k) {
      const ThermalBoundReport& r = thermal[k];
      out << "thermal beta=" << betas[k].label << ": <H> = "
          << format_number(r.mean_energy)
          << "  lnZ = " << format_number(r.log_z)
          << "  rhs = " << format_number(r.rhs)
          << "  margin = " << format_number(r.margin) << "  relent = "
          << (std::isfinite(r.relative_entropy_to_gibbs)
                  ? format_number(r.relative_entropy_to_gibbs)
                  : std::string("inf"))
          << "  holds = " << yes_no(r.holds) << "\n";
    }
    if (!thermal.empty()) {
      out << "tighter bound: "
          << (thermal_tighter ? "thermal beta=" + betas[best].label
                              : std::string("portrait"))
          << " (portrait rhs = " << format_number(sub.rhs)
          << ", best thermal rhs = " << format_number(thermal[best].rhs)
          << ")\n";
    }
  }
  return all_hold ? 0 : 1;
}

int run_sweep_cmd(const SweepSpec& spec, const std::string& format,
                  const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  std::vector<SweepRow> rows = run_sweep(spec);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);  // fixed newlines on any platform
    if (!file) {
      err << "cannot write '" << out_path << "'\n";
      return 2;
    }
    sink = &file;
  }
  if (format == "json")
    *sink << sweep_to_json(spec, rows).dump(2) << "\n";
  else
    write_sweep_csv(spec, rows, *sink);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"entropic and entropy-energy inequality checks for qudit "
               "density matrices"};
  app.require_subcommand(1);

  std::string state_path;
  std::string ham_path;
  std::string beta_csv = "-1,5,0.1";
  std::string betas_csv = "-1,5,0.1";
  std::string out_path;
  std::string format = "csv";
  double tol = tol::kDensity;
  bool fix = false;
  bool as_json = false;
  SweepSpec spec = default_sweep_spec();

  CLI::App* validate = app.add_subcommand(
      "validate", "check a state document against the density-matrix rules");
  validate->add_option("file", state_path, "state document (JSON)")
      ->required();
  validate->add_option("--tol", tol, "acceptance tolerance");
  validate->add_flag("--fix", fix,
                     "clamp negative eigenvalues and renormalize instead of "
                     "rejecting");

  CLI::App* report = app.add_subcommand(
      "report", "inequality report for one state (and optional Hamiltonian)");
  report->add_option("state", state_path, "state document (JSON)")->required();
  report->add_option("--ham", ham_path, "Hamiltonian document (JSON)");
  report->add_option("--beta", beta_csv,
                     "comma-separated inverse temperatures");
  report->add_flag("--json", as_json, "emit a JSON document");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate the worked qutrit family over its parameter range");
  sweep->add_option("--b-min", spec.b_min, "lower edge of the b grid");
  sweep->add_option("--b-max", spec.b_max, "upper edge of the b grid");
  sweep->add_option("--steps", spec.steps, "number of grid points");
  sweep->add_option("--betas", betas_csv,
                    "comma-separated inverse temperatures");
  sweep->add_option("--out", out_path, "output path (stdout when absent)");
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate(state_path, tol, fix, out);
    if (report->parsed())
      return run_report(state_path, ham_path, beta_csv, as_json, out);
    spec.betas = parse_beta_list(betas_csv);
    return run_sweep_cmd(spec, format, out_path, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qentro
