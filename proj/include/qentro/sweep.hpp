#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qentro/thermal.hpp"

namespace qentro {

// 9 significant digits, locale-independent ("%.9g" semantics).
std::string format_number(double v);

// Inverse temperature with the spelling it was given on the command line,
// so output column names echo the caller's formatting byte for byte.
struct BetaValue {
  std::string label;
  double value = 0.0;
};

// "-1,5,0.1" -> values; throws ParseError on empty items or trailing junk.
std::vector<BetaValue> parse_beta_list(const std::string& csv);

struct SweepSpec {
  double b_min = -1.0;
  double b_max = 0.5;
  int steps = 151;
  std::vector<BetaValue> betas;  // defaults filled by default_sweep_spec()
};

SweepSpec default_sweep_spec();

struct SweepRow {
  double b = 0.0;
  double entropy = 0.0;   // S(rho(b))
  double cher_rhs = 0.0;  // portrait bound: S1 + S2
  double iq = 0.0;
  std::vector<double> thermal_rhs;  // one per beta, in betas order
};

// One row per grid point of the worked family, ascending b, endpoints hit
// exactly. Every row is checked against its inequalities before being
// returned; a violation throws InequalityViolation.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Header: b,S,cher_rhs,iq,rhs_beta_<label>,... then one line per row.
void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                     std::ostream& out);

nlohmann::ordered_json sweep_to_json(const SweepSpec& spec,
                                     const std::vector<SweepRow>& rows);

}  // namespace qentro
