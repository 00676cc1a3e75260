#include "qentro/sweep.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace qentro {

std::string format_number(double v) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

std::vector<BetaValue> parse_beta_list(const std::string& csv) {
  std::vector<BetaValue> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string item = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty() || item.find_first_of(" \t") != std::string::npos)
      throw Error(ErrorKind::ParseError, "bad entry in beta list '" + csv + "'");
    const char* begin = item.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + item.size() || !std::isfinite(value))
      throw Error(ErrorKind::ParseError, "bad beta value '" + item + "'");
    out.push_back({item, value});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

SweepSpec default_sweep_spec() {
  SweepSpec spec;
  spec.betas = parse_beta_list("-1,5,0.1");
  return spec;
}

namespace {

void check_row(const SweepRow& row, const SweepSpec& spec) {
  const auto fail = [&](const std::string& which, double rhs) {
    std::ostringstream os;
    os << "at b = " << row.b << ": S = " << row.entropy << " exceeds "
       << which << " = " << rhs;
    throw Error(ErrorKind::InequalityViolation, os.str());
  };
  if (row.entropy > row.cher_rhs + tol::kInequality)
    fail("cher_rhs", row.cher_rhs);
  for (std::size_t k = 0; k < row.thermal_rhs.size(); ++k) {
    if (row.entropy > row.thermal_rhs[k] + tol::kInequality)
      fail("rhs_beta_" + spec.betas[k].label, row.thermal_rhs[k]);
  }
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.steps < 2)
    throw Error(ErrorKind::ParamOutOfRange,
                "steps must be >= 2, got " + std::to_string(spec.steps));
  if (!(spec.b_min <= spec.b_max))
    throw Error(ErrorKind::ParamOutOfRange, "b-min above b-max");
  if (spec.b_min < -1.0 || spec.b_max > 0.5)
    throw Error(ErrorKind::ParamOutOfRange,
                "b range must stay within [-1, 1/2]");

  const double step = (spec.b_max - spec.b_min) / (spec.steps - 1);
  std::vector<SweepRow> rows;
  rows.reserve(spec.steps);

  for (int k = 0; k < spec.steps; ++k) {
    // Hit the endpoint exactly; accumulated rounding must not push b
    // outside the family's validity domain.
    const double b =
        k == spec.steps - 1 ? spec.b_max : spec.b_min + k * step;
    QutritExample ex = example_family(b);

    SweepRow row;
    row.b = b;
    SubadditivityReport sub = subadditivity_report(ex.state);
    row.entropy = sub.entropy;
    row.cher_rhs = sub.rhs;
    row.iq = sub.iq;
    row.thermal_rhs.reserve(spec.betas.size());
    for (const BetaValue& beta : spec.betas) {
      row.thermal_rhs.push_back(
          entropy_energy_report(ex.state, ex.hamiltonian, beta.value).rhs);
    }
    check_row(row, spec);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                     std::ostream& out) {
  out << "b,S,cher_rhs,iq";
  for (const BetaValue& beta : spec.betas) out << ",rhs_beta_" << beta.label;
  out << "\n";
  for (const SweepRow& row : rows) {
    out << format_number(row.b) << ',' << format_number(row.entropy) << ','
        << format_number(row.cher_rhs) << ',' << format_number(row.iq);
    for (double rhs : row.thermal_rhs) out << ',' << format_number(rhs);
    out << "\n";
  }
}

namespace {

// Keep JSON numerically identical to the CSV: round through the same
// 9-significant-digit text.
double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

}  // namespace

nlohmann::ordered_json sweep_to_json(const SweepSpec& spec,
                                     const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json j;
  j["b_min"] = spec.b_min;
  j["b_max"] = spec.b_max;
  j["steps"] = spec.steps;
  nlohmann::ordered_json betas = nlohmann::ordered_json::array();
  for (const BetaValue& beta : spec.betas) betas.push_back(beta.value);
  j["betas"] = betas;

  nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json r;
    r["b"] = rounded(row.b);
    r["S"] = rounded(row.entropy);
    r["cher_rhs"] = rounded(row.cher_rhs);
    r["iq"] = rounded(row.iq);
    nlohmann::ordered_json rhs;
    for (std::size_t k = 0; k < spec.betas.size(); ++k)
      rhs[spec.betas[k].label] = rounded(row.thermal_rhs[k]);
    r["thermal_rhs"] = rhs;
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  return j;
}

}  // namespace qentro
