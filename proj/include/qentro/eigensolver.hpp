#pragma once

#include <vector>

#include "qentro/matrix.hpp"

namespace qentro {

// A = U diag(eigenvalues) U^dagger with eigenvalues ascending and the
// columns of U phase-fixed (largest-magnitude component real positive).
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix unitary;

  ComplexMatrix reconstruct() const;
};

// Cyclic Jacobi diagonalization. Deterministic for a fixed input: fixed
// sweep order, stable eigenvalue sort, fixed eigenvector phase convention.
// Throws ConvergenceFailure if the off-diagonal norm is not below
// tol::kJacobiOffDiag * ||A||_F after tol::kJacobiMaxSweeps sweeps.
EigenDecomposition eigh(const HermitianMatrix& a);

enum class SpectralFunction {
  Exp,
  // ln on the support: eigenvalues <= tol::kSupport map to 0 in the output
  // spectrum. Callers must only use the result inside traces against states
  // supported there. Eigenvalues below -tol::kSupport raise NegativeSpectrum.
  LogOnSupport,
};

// U diag(f(lambda_i)) U^dagger.
HermitianMatrix spectral_function(const HermitianMatrix& a, SpectralFunction f);

}  // namespace qentro
