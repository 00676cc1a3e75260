#pragma once

#include <array>

#include "qentro/density.hpp"
#include "qentro/matrix.hpp"

namespace qentro {

// Energy matrix in dimensionless units (hbar = k_B = 1).
class Hamiltonian {
 public:
  explicit Hamiltonian(HermitianMatrix m) : mat_(std::move(m)) {}

  static Hamiltonian validate(const ComplexMatrix& m,
                              double tol = tol::kHermiticity) {
    return Hamiltonian(HermitianMatrix::validate(m, tol));
  }

  std::size_t dim() const noexcept { return mat_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return mat_; }
  const ComplexMatrix& matrix() const noexcept { return mat_.matrix(); }

 private:
  HermitianMatrix mat_;
};

// exp(-beta H) / Tr exp(-beta H), computed with max-shifted exponentials.
// Throws OverflowRisk when |beta| * (E_max - E_min) > tol::kExpArgLimit.
DensityMatrix gibbs_state(const Hamiltonian& h, double beta);

// ln Tr exp(-beta H), max-shifted for stability.
double log_partition(const Hamiltonian& h, double beta);

// Re Tr(rho H); the imaginary residue must vanish within 1e-10.
double mean_energy(const DensityMatrix& rho, const Hamiltonian& h);

// Tr(rho ln rho - rho ln sigma), logs on support. Returns +infinity when
// rho carries more than tol::kSupportLeak weight outside sigma's support.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

struct ThermalBoundReport {
  double beta = 0.0;
  double entropy = 0.0;      // S(rho)
  double mean_energy = 0.0;  // Tr(rho H)
  double log_z = 0.0;        // ln Z(beta)
  double rhs = 0.0;          // beta * mean_energy + log_z
  double margin = 0.0;       // rhs - entropy
  bool holds = false;        // margin >= -tol::kInequality
  // D(rho || gibbs(beta)); equal to margin within tol::kInequality when
  // finite and the Gibbs state is full-rank above the support tolerance.
  double relative_entropy_to_gibbs = 0.0;
};

// Checks S <= beta <H> + ln Z(beta) and cross-validates the right side
// against the relative entropy to the Gibbs state.
ThermalBoundReport entropy_energy_report(const DensityMatrix& rho,
                                         const Hamiltonian& h, double beta);

// The fixed-form bound S + <H> <= ln Tr e^H, i.e. the beta = -1 member.
ThermalBoundReport energy_form_report(const DensityMatrix& rho,
                                      const Hamiltonian& h);

// Closed-form spectrum for a 3x3 Hamiltonian with H12 = H21 = H23 = H32 = 0:
//   E1 = H22, E2,3 = (H11 + H33 -/+ sqrt((H11 - H33)^2 + 4 |H13|^2)) / 2.
// Throws SparsityViolated when the zero pattern does not hold.
std::array<double, 3> special_qutrit_spectrum(const Hamiltonian& h);

// The worked parametric family: rho(b) = diag(1+b, 1+b, 1-2b)/3 with the
// fixed sparse Hamiltonian [[1,0,1],[0,-1,0],[1,0,1]]. Valid for
// -1 <= b <= 1/2; ParamOutOfRange outside.
struct QutritExample {
  DensityMatrix state;
  Hamiltonian hamiltonian;
};

QutritExample example_family(double b);

}  // namespace qentro
