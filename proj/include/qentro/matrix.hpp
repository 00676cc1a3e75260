#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qentro/errors.hpp"
#include "qentro/tolerances.hpp"

namespace qentro {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major, dim >= 1. Small sizes only
// (n <= 16); everything is stored and copied by value.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double>& entries);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex scalar) const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

// max_ij |A_ij - B_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |A_ij - conj(A_ji)|
double hermiticity_residual(const ComplexMatrix& m);

// Tr(A B) = sum_ij A_ij B_ji. Throws DimensionMismatch.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// A matrix known to satisfy A = A^dagger exactly in its stored form
// (entries are mirrored on construction, diagonal imaginary parts zeroed).
class HermitianMatrix {
 public:
  // Accepts m when max |m_ij - conj(m_ji)| <= tol * max(1, maxabs m) and
  // stores (m + m^dagger)/2. Throws NonFinite or NotHermitian.
  static HermitianMatrix validate(const ComplexMatrix& m,
                                  double tol = tol::kHermiticity);

  // Symmetrizes without a tolerance check, for matrices that are Hermitian
  // by construction (spectral assemblies, partial traces, ...).
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  std::size_t dim() const noexcept { return mat_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }

  // Largest single-entry change applied by symmetrization in validate().
  double correction() const noexcept { return correction_; }

 private:
  HermitianMatrix(ComplexMatrix m, double correction)
      : mat_(std::move(m)), correction_(correction) {}

  ComplexMatrix mat_;
  double correction_ = 0.0;
};

// Alias matching the role the factory plays in the API.
HermitianMatrix validate_hermitian(const ComplexMatrix& m,
                                   double tol = tol::kHermiticity);

}  // namespace qentro
