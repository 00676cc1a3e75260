#pragma once

#include <cstddef>

#include "qentro/eigensolver.hpp"
#include "qentro/matrix.hpp"

namespace qentro {

// Hermitian, unit-trace, positive-semidefinite matrix. Construct through
// validate_density() or, for matrices valid by construction, unchecked().
class DensityMatrix {
 public:
  static DensityMatrix unchecked(HermitianMatrix m) {
    return DensityMatrix(std::move(m));
  }

  std::size_t dim() const noexcept { return mat_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return mat_; }
  const ComplexMatrix& matrix() const noexcept { return mat_.matrix(); }

 private:
  explicit DensityMatrix(HermitianMatrix m) : mat_(std::move(m)) {}

  HermitianMatrix mat_;
};

struct ValidatedDensity {
  DensityMatrix state;
  // maxabs(repaired - input); 0 when no repair was needed or fix = false.
  double repair_distance = 0.0;
};

// Residuals of the three density-matrix invariants, computed on the
// symmetrized matrix without rejecting anything (reporting aid).
struct DensityDiagnostics {
  double hermiticity = 0.0;   // max |M_ij - conj(M_ji)|
  double trace_deviation = 0.0;  // |Tr - 1|
  double min_eigenvalue = 0.0;
};

DensityDiagnostics probe_density(const ComplexMatrix& m);

// fix = false: accept only when Hermitian, unit-trace and PSD within tol
// (throws NotHermitian / TraceNotOne / NotPositive naming the magnitude).
// fix = true: symmetrize, clamp negative eigenvalues to zero, renormalize
// the trace to one, and report the repair distance.
ValidatedDensity validate_density(const ComplexMatrix& m,
                                  double tol = tol::kDensity,
                                  bool fix = false);

// Embeds rho into the top-left block of a target_dim matrix; the spectrum
// gains (target_dim - dim) zeros and nothing else changes.
DensityMatrix zero_pad_embed(const DensityMatrix& rho, std::size_t target_dim);

enum class Subsystem { First, Second };

// Index-sum partial trace over a (n1, n2) bipartition of dim = n1 * n2,
// composite index (a, b) -> a * n2 + b.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t n1,
                            std::size_t n2, Subsystem keep);

// -sum lambda ln lambda in nats; zero modes (lambda <= tol::kSupport)
// contribute nothing; result clamped to >= 0.
double von_neumann_entropy(const DensityMatrix& rho);

// The two reduced states of the padded bipartition.
struct PortraitPair {
  DensityMatrix rho1;
  DensityMatrix rho2;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

// Pads dim d to the smallest n = 2 * ceil(d/2) and reduces both ways.
// d = 3 pads to 4 = 2 x 2; d = 4 needs no padding.
PortraitPair qubit_portrait(const DensityMatrix& rho);

struct SubadditivityReport {
  double entropy = 0.0;   // S of the input state (padding leaves it unchanged)
  double entropy1 = 0.0;  // S of the first reduced state
  double entropy2 = 0.0;  // S of the second reduced state
  double iq = 0.0;        // entropy1 + entropy2 - entropy
  double rhs = 0.0;       // entropy1 + entropy2
  double margin = 0.0;    // rhs - entropy
  bool holds = false;     // margin >= -tol::kInequality
};

SubadditivityReport subadditivity_report(const DensityMatrix& rho);

}  // namespace qentro
