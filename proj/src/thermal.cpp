#include "qentro/thermal.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qentro {

namespace {

void check_exponent_range(const std::vector<double>& energies, double beta) {
  if (!std::isfinite(beta))
    throw Error(ErrorKind::ParamOutOfRange, "beta must be finite");
  const double spread = energies.back() - energies.front();
  if (std::abs(beta) * spread > tol::kExpArgLimit) {
    std::ostringstream os;
    os << "|beta| * spectral spread = " << std::abs(beta) * spread
       << " exceeds " << tol::kExpArgLimit;
    throw Error(ErrorKind::OverflowRisk, os.str());
  }
}

double max_shift(const std::vector<double>& energies, double beta) {
  double m = -beta * energies.front();
  for (double e : energies) m = std::max(m, -beta * e);
  return m;
}

}  // namespace

DensityMatrix gibbs_state(const Hamiltonian& h, double beta) {
  EigenDecomposition eig = eigh(h.hermitian());
  check_exponent_range(eig.eigenvalues, beta);

  const double shift = max_shift(eig.eigenvalues, beta);
  std::vector<double> weights(eig.eigenvalues.size());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = std::exp(-beta * eig.eigenvalues[i] - shift);
    total += weights[i];
  }
  for (double& w : weights) w /= total;

  EigenDecomposition scaled{std::move(weights), eig.unitary};
  return DensityMatrix::unchecked(
      HermitianMatrix::symmetrized(scaled.reconstruct()));
}

double log_partition(const Hamiltonian& h, double beta) {
  EigenDecomposition eig = eigh(h.hermitian());
  check_exponent_range(eig.eigenvalues, beta);

  const double shift = max_shift(eig.eigenvalues, beta);
  double total = 0.0;
  for (double e : eig.eigenvalues) total += std::exp(-beta * e - shift);
  return shift + std::log(total);
}

double mean_energy(const DensityMatrix& rho, const Hamiltonian& h) {
  const Complex t = trace_product(rho.matrix(), h.matrix());
  if (std::abs(t.imag()) > 1e-10 * std::max(1.0, std::abs(t.real()))) {
    std::ostringstream os;
    os << "imaginary residue " << t.imag() << " in Tr(rho H)";
    throw Error(ErrorKind::NotHermitian, os.str());
  }
  return t.real();
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(rho.dim()) + " vs " +
                    std::to_string(sigma.dim()));

  EigenDecomposition sig = eigh(sigma.hermitian());
  const std::size_t n = rho.dim();

  // Diagonal of U^dagger rho U: weight of rho on each sigma eigenvector.
  std::vector<double> weight(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Complex w = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        w += std::conj(sig.unitary(k, i)) * rho.matrix()(k, l) *
             sig.unitary(l, i);
    weight[i] = w.real();
  }

  double leak = 0.0;
  double cross = 0.0;  // Tr(rho ln sigma) over sigma's support
  for (std::size_t i = 0; i < n; ++i) {
    if (sig.eigenvalues[i] > tol::kSupport) {
      cross += weight[i] * std::log(sig.eigenvalues[i]);
    } else {
      leak += weight[i];
    }
  }
  if (leak > tol::kSupportLeak)
    return std::numeric_limits<double>::infinity();

  EigenDecomposition re = eigh(rho.hermitian());
  double self = 0.0;  // Tr(rho ln rho)
  for (double lambda : re.eigenvalues) {
    if (lambda > tol::kSupport) self += lambda * std::log(lambda);
  }
  return self - cross;
}

ThermalBoundReport entropy_energy_report(const DensityMatrix& rho,
                                         const Hamiltonian& h, double beta) {
  if (rho.dim() != h.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(rho.dim()) + " vs " + std::to_string(h.dim()));

  ThermalBoundReport r;
  r.beta = beta;
  r.entropy = von_neumann_entropy(rho);
  r.mean_energy = mean_energy(rho, h);
  r.log_z = log_partition(h, beta);
  r.rhs = beta * r.mean_energy + r.log_z;
  r.margin = r.rhs - r.entropy;
  r.holds = r.margin >= -tol::kInequality;

  r.relative_entropy_to_gibbs = relative_entropy(rho, gibbs_state(h, beta));

  // The two right-hand-side routes compute the same quantity. The
  // relative-entropy route loses ln-accuracy once a Gibbs weight drops
  // toward eps, so cross-check only while every weight stays resolvable;
  // the weights themselves come from the shifted log-space form and are
  // precise at any admissible beta. Disagreement under the guard signals a
  // solver defect, not bad input.
  EigenDecomposition spectrum = eigh(h.hermitian());
  double min_weight = 1.0;
  for (double e : spectrum.eigenvalues)
    min_weight = std::min(min_weight, std::exp(-beta * e - r.log_z));
  if (min_weight > tol::kCrossCheckRank &&
      std::isfinite(r.relative_entropy_to_gibbs) &&
      std::abs(r.margin - r.relative_entropy_to_gibbs) > tol::kInequality) {
    std::ostringstream os;
    os << "margin " << r.margin << " vs relative entropy "
       << r.relative_entropy_to_gibbs;
    throw Error(ErrorKind::InequalityViolation, os.str());
  }
  return r;
}

ThermalBoundReport energy_form_report(const DensityMatrix& rho,
                                      const Hamiltonian& h) {
  return entropy_energy_report(rho, h, -1.0);
}

std::array<double, 3> special_qutrit_spectrum(const Hamiltonian& h) {
  if (h.dim() != 3)
    throw Error(ErrorKind::DimensionMismatch,
                "closed form needs dim 3, got " + std::to_string(h.dim()));
  const ComplexMatrix& m = h.matrix();
  const double off = std::max(std::abs(m(0, 1)), std::abs(m(1, 2)));
  if (off > tol::kSupport) {
    std::ostringstream os;
    os << "entries (1,2)/(2,3) must vanish, max magnitude " << off;
    throw Error(ErrorKind::SparsityViolated, os.str());
  }

  const double h11 = m(0, 0).real();
  const double h22 = m(1, 1).real();
  const double h33 = m(2, 2).real();
  const double coupling = std::norm(m(0, 2));  // H13 * H31 = |H13|^2
  const double root =
      std::sqrt((h11 - h33) * (h11 - h33) + 4.0 * coupling);
  return {h22, (h11 + h33 - root) / 2.0, (h11 + h33 + root) / 2.0};
}

QutritExample example_family(double b) {
  if (!(b >= -1.0 && b <= 0.5)) {
    std::ostringstream os;
    os << "b = " << b << " outside [-1, 1/2]";
    throw Error(ErrorKind::ParamOutOfRange, os.str());
  }
  ComplexMatrix rho(3);
  rho(0, 0) = (1.0 + b) / 3.0;
  rho(1, 1) = (1.0 + b) / 3.0;
  rho(2, 2) = (1.0 - 2.0 * b) / 3.0;

  ComplexMatrix ham{{1.0, 0.0, 1.0}, {0.0, -1.0, 0.0}, {1.0, 0.0, 1.0}};
  return {DensityMatrix::unchecked(HermitianMatrix::symmetrized(rho)),
          Hamiltonian(HermitianMatrix::symmetrized(ham))};
}

}  // namespace qentro
