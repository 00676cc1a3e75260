#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qentro/density.hpp"
#include "qentro/eigensolver.hpp"
#include "qentro/matrix.hpp"

namespace qentro::testing {

inline ComplexMatrix random_complex(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline HermitianMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  return HermitianMatrix::symmetrized(random_complex(rng, n));
}

// A^dagger A / Tr(A^dagger A): valid by construction and full rank almost
// surely.
inline DensityMatrix random_density(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix a = random_complex(rng, n);
  ComplexMatrix g = a.adjoint() * a;
  const double t = g.trace().real();
  return DensityMatrix::unchecked(
      HermitianMatrix::symmetrized(g * Complex(1.0 / t, 0.0)));
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  return eigh(random_hermitian(rng, n)).unitary;
}

// The closed 2x2 reduction formulas for a padded qutrit, written directly
// on the 3x3 entries. Independent check against the index-sum path.
inline ComplexMatrix reduced_block_first(const ComplexMatrix& rho3) {
  ComplexMatrix out(2);
  out(0, 0) = rho3(0, 0) + rho3(1, 1);
  out(0, 1) = rho3(0, 2);
  out(1, 0) = rho3(2, 0);
  out(1, 1) = rho3(2, 2);
  return out;
}

inline ComplexMatrix reduced_block_second(const ComplexMatrix& rho3) {
  ComplexMatrix out(2);
  out(0, 0) = rho3(0, 0) + rho3(2, 2);
  out(0, 1) = rho3(0, 1);
  out(1, 0) = rho3(1, 0);
  out(1, 1) = rho3(1, 1);
  return out;
}

// -sum p ln p over a probability list, 0 ln 0 = 0.
inline double scalar_entropy(const std::vector<double>& probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

// ln sum exp(-beta E) straight off a spectrum; safe for |beta * E| < 700.
inline double scalar_log_partition(const std::vector<double>& energies,
                                   double beta) {
  double z = 0.0;
  for (double e : energies) z += std::exp(-beta * e);
  return std::log(z);
}

}  // namespace qentro::testing
