#include "qentro/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qentro {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p,q). The 2x2 pivot block
// [[alpha, beta], [conj(beta), gamma]] is diagonalized by the unitary
//   G = [[c, -s*ph], [s*conj(ph), c]],  ph = beta/|beta|,
// with tan(theta) = t the root of t^2 - 2*tau*t - 1 = 0 of smaller
// magnitude, tau = (gamma - alpha) / (2|beta|). |theta| <= pi/4 keeps the
// cyclic method convergent. A <- G^dagger A G, V <- V G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double beta = std::abs(apq);
  if (beta < 1e-300) return;

  const Complex ph = apq / beta;
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * beta);
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  const double t = -sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.dim();

  a(p, p) = alpha * c * c + 2.0 * c * s * beta + gamma * s * s;
  a(q, q) = alpha * s * s - 2.0 * c * s * beta + gamma * c * c;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + s * std::conj(ph) * akq;
    a(k, q) = -s * ph * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + s * std::conj(ph) * vkq;
    v(k, q) = -s * ph * vkp + c * vkq;
  }
}

// Ascending eigenvalue order, ties kept in sweep order; then each column's
// largest-magnitude component is made real and positive.
EigenDecomposition sort_and_fix_phases(const ComplexMatrix& a,
                                       const ComplexMatrix& v) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();

    std::size_t imax = 0;
    double vmax = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double m = std::abs(v(k, src));
      if (m > vmax) {
        vmax = m;
        imax = k;
      }
    }
    Complex phase(1.0, 0.0);
    if (vmax > 0.0) phase = std::conj(v(imax, src)) / vmax;
    for (std::size_t k = 0; k < n; ++k) out.unitary(k, col) = v(k, src) * phase;
  }
  return out;
}

}  // namespace

ComplexMatrix EigenDecomposition::reconstruct() const {
  const std::size_t n = unitary.dim();
  ComplexMatrix scaled(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = unitary(i, j) * eigenvalues[j];
  return scaled * unitary.adjoint();
}

EigenDecomposition eigh(const HermitianMatrix& input) {
  ComplexMatrix a = input.matrix();
  const std::size_t n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double norm = a.frobenius_norm();
  const double target = tol::kJacobiOffDiag * norm;

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep++ >= tol::kJacobiMaxSweeps) {
      std::ostringstream os;
      os << "off-diagonal norm " << off_diagonal_norm(a)
         << " above target " << target << " after " << tol::kJacobiMaxSweeps
         << " sweeps";
      throw Error(ErrorKind::ConvergenceFailure, os.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        rotate(a, v, p, q);
  }

  return sort_and_fix_phases(a, v);
}

HermitianMatrix spectral_function(const HermitianMatrix& input,
                                  SpectralFunction f) {
  EigenDecomposition eig = eigh(input);

  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    switch (f) {
      case SpectralFunction::Exp:
        mapped[i] = std::exp(lambda);
        break;
      case SpectralFunction::LogOnSupport:
        if (lambda < -tol::kSupport) {
          std::ostringstream os;
          os << "eigenvalue " << lambda << " below -" << tol::kSupport;
          throw Error(ErrorKind::NegativeSpectrum, os.str());
        }
        mapped[i] = lambda > tol::kSupport ? std::log(lambda) : 0.0;
        break;
    }
  }

  EigenDecomposition scaled{std::move(mapped), eig.unitary};
  return HermitianMatrix::symmetrized(scaled.reconstruct());
}

}  // namespace qentro
