#include "qentro/matrix.hpp"

#include <cmath>
#include <sstream>

namespace qentro {

namespace {

std::string dim_pair(std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << a << " vs " << b;
  return os.str();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) {
    throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be >= 1");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "ragged initializer, row " + std::to_string(i));
    }
    std::size_t j = 0;
    for (const Complex& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out(i, j) = std::conj((*this)(j, i));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_)
    throw Error(ErrorKind::DimensionMismatch, dim_pair(dim_, rhs.dim_));
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = data_[k] + rhs.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_)
    throw Error(ErrorKind::DimensionMismatch, dim_pair(dim_, rhs.dim_));
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = data_[k] - rhs.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_)
    throw Error(ErrorKind::DimensionMismatch, dim_pair(dim_, rhs.dim_));
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += aik * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = data_[k] * scalar;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch, dim_pair(a.dim(), b.dim()));
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double hermiticity_residual(const ComplexMatrix& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
  return r;
}

namespace {

// (m + m^dagger)/2 with exact mirror symmetry in the stored entries.
ComplexMatrix half_sum_with_adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

}  // namespace

HermitianMatrix HermitianMatrix::validate(const ComplexMatrix& m, double tol) {
  if (!m.all_finite())
    throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf");
  if (!(tol > 0.0))
    throw Error(ErrorKind::ParamOutOfRange, "tolerance must be positive");
  const double residual = hermiticity_residual(m);
  const double scale = std::max(1.0, m.max_abs());
  if (residual > tol * scale) {
    std::ostringstream os;
    os << "asymmetry " << residual << " exceeds tolerance " << tol * scale;
    throw Error(ErrorKind::NotHermitian, os.str());
  }
  ComplexMatrix sym = half_sum_with_adjoint(m);
  return HermitianMatrix(std::move(sym), residual / 2.0);
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (!m.all_finite())
    throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf");
  return HermitianMatrix(half_sum_with_adjoint(m), 0.0);
}

HermitianMatrix validate_hermitian(const ComplexMatrix& m, double tol) {
  return HermitianMatrix::validate(m, tol);
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch, dim_pair(a.dim(), b.dim()));
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      t += a(i, j) * b(j, i);
  return t;
}

}  // namespace qentro
