#include "qentro/density.hpp"

#include <cmath>
#include <sstream>

namespace qentro {

namespace {

std::string with_value(const char* text, double value) {
  std::ostringstream os;
  os << text << " " << value;
  return os.str();
}

}  // namespace

DensityDiagnostics probe_density(const ComplexMatrix& m) {
  if (!m.all_finite())
    throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf");
  DensityDiagnostics d;
  d.hermiticity = hermiticity_residual(m);
  HermitianMatrix sym = HermitianMatrix::symmetrized(m);
  d.trace_deviation = std::abs(sym.matrix().trace() - Complex(1.0));
  d.min_eigenvalue = eigh(sym).eigenvalues.front();
  return d;
}

ValidatedDensity validate_density(const ComplexMatrix& m, double tol,
                                  bool fix) {
  if (!m.all_finite())
    throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf");

  if (!fix) {
    HermitianMatrix herm = HermitianMatrix::validate(m, tol);
    const double trace_dev = std::abs(herm.matrix().trace() - Complex(1.0));
    if (trace_dev > tol)
      throw Error(ErrorKind::TraceNotOne, with_value("deviation", trace_dev));
    EigenDecomposition eig = eigh(herm);
    const double lambda_min = eig.eigenvalues.front();
    if (lambda_min < -tol)
      throw Error(ErrorKind::NotPositive,
                  with_value("eigenvalue", lambda_min));
    return {DensityMatrix::unchecked(std::move(herm)), 0.0};
  }

  // Repair path: symmetrize, clamp the spectrum to >= 0, renormalize.
  HermitianMatrix sym = HermitianMatrix::symmetrized(m);
  EigenDecomposition eig = eigh(sym);
  double total = 0.0;
  for (double& lambda : eig.eigenvalues) {
    if (lambda < 0.0) lambda = 0.0;
    total += lambda;
  }
  if (!(total > 0.0))
    throw Error(ErrorKind::NotPositive,
                "clamped spectrum sums to zero, nothing to renormalize");
  for (double& lambda : eig.eigenvalues) lambda /= total;

  HermitianMatrix repaired = HermitianMatrix::symmetrized(eig.reconstruct());
  const double distance = max_abs_diff(repaired.matrix(), m);
  return {DensityMatrix::unchecked(std::move(repaired)), distance};
}

DensityMatrix zero_pad_embed(const DensityMatrix& rho, std::size_t target_dim) {
  const std::size_t d = rho.dim();
  if (target_dim < d)
    throw Error(ErrorKind::DimensionShrink,
                "target " + std::to_string(target_dim) + " below dim " +
                    std::to_string(d));
  if (target_dim == d) return rho;
  ComplexMatrix padded(target_dim);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      padded(i, j) = rho.matrix()(i, j);
  return DensityMatrix::unchecked(HermitianMatrix::symmetrized(padded));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t n1,
                            std::size_t n2, Subsystem keep) {
  if (n1 == 0 || n2 == 0 || n1 * n2 != rho.dim())
    throw Error(ErrorKind::DimensionNotFactorizable,
                std::to_string(rho.dim()) + " != " + std::to_string(n1) +
                    " * " + std::to_string(n2));
  const ComplexMatrix& m = rho.matrix();

  if (keep == Subsystem::First) {
    ComplexMatrix out(n1);
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t ap = 0; ap < n1; ++ap) {
        Complex sum = 0.0;
        for (std::size_t b = 0; b < n2; ++b)
          sum += m(a * n2 + b, ap * n2 + b);
        out(a, ap) = sum;
      }
    return DensityMatrix::unchecked(HermitianMatrix::symmetrized(out));
  }

  ComplexMatrix out(n2);
  for (std::size_t b = 0; b < n2; ++b)
    for (std::size_t bp = 0; bp < n2; ++bp) {
      Complex sum = 0.0;
      for (std::size_t a = 0; a < n1; ++a)
        sum += m(a * n2 + b, a * n2 + bp);
      out(b, bp) = sum;
    }
  return DensityMatrix::unchecked(HermitianMatrix::symmetrized(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  EigenDecomposition eig = eigh(rho.hermitian());
  double s = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda > tol::kSupport) s -= lambda * std::log(lambda);
  }
  return s < 0.0 ? 0.0 : s;
}

PortraitPair qubit_portrait(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  if (d < 2)
    throw Error(ErrorKind::DimensionMismatch,
                "portrait needs dim >= 2, got " + std::to_string(d));
  const std::size_t n2 = (d + 1) / 2;
  const std::size_t n1 = 2;
  DensityMatrix padded = zero_pad_embed(rho, n1 * n2);
  return PortraitPair{partial_trace(padded, n1, n2, Subsystem::First),
                      partial_trace(padded, n1, n2, Subsystem::Second), n1,
                      n2};
}

SubadditivityReport subadditivity_report(const DensityMatrix& rho) {
  PortraitPair pair = qubit_portrait(rho);
  SubadditivityReport r;
  r.entropy = von_neumann_entropy(rho);
  r.entropy1 = von_neumann_entropy(pair.rho1);
  r.entropy2 = von_neumann_entropy(pair.rho2);
  r.rhs = r.entropy1 + r.entropy2;
  r.iq = r.rhs - r.entropy;
  r.margin = r.rhs - r.entropy;
  r.holds = r.margin >= -tol::kInequality;
  return r;
}

}  // namespace qentro
