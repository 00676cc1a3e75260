#pragma once

namespace qentro::tol {

// Hermiticity: max |A_ij - conj(A_ji)| allowed, relative to max(1, maxabs).
inline constexpr double kHermiticity = 1e-10;

// Density-matrix acceptance: |Tr - 1| and the admissible negative eigenvalue.
inline constexpr double kDensity = 1e-8;

// Eigenvalues at or below this count as zero modes (0 ln 0 = 0 convention).
inline constexpr double kSupport = 1e-10;

// Uniform pass threshold: an inequality holds when margin >= -kInequality.
inline constexpr double kInequality = 1e-9;

// Jacobi sweep termination: off-diagonal Frobenius norm relative to ||A||_F.
inline constexpr double kJacobiOffDiag = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

// Raw |beta| * spectral spread beyond which exp() would overflow even
// before shifting; callers get OverflowRisk instead of inf.
inline constexpr double kExpArgLimit = 700.0;

// Weight of rho outside sigma's support beyond which D(rho||sigma) = +inf.
inline constexpr double kSupportLeak = 1e-9;

// Smallest Gibbs weight at which the relative-entropy route is still
// accurate enough to cross-check the energetic route at kInequality: an
// eigenvalue re-extracted from an assembled matrix carries ~eps absolute
// error, so ln(lambda) is only trustworthy for lambda well above eps.
inline constexpr double kCrossCheckRank = 1e-5;

}  // namespace qentro::tol
