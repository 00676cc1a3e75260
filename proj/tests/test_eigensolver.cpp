#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qentro/eigensolver.hpp"
#include "test_support.hpp"

using namespace qentro;

TEST_CASE("eigh of a diagonal matrix sorts and permutes") {
  HermitianMatrix a =
      HermitianMatrix::symmetrized(ComplexMatrix::diagonal({3, 1, 2}));
  EigenDecomposition eig = eigh(a);
  REQUIRE(eig.eigenvalues.size() == 3);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));
  // Columns are the standard basis vectors of the sorted positions.
  CHECK(std::abs(eig.unitary(1, 0) - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(eig.unitary(2, 1) - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(eig.unitary(0, 2) - Complex(1.0)) <= 1e-14);
}

TEST_CASE("eigh of the worked sparse Hamiltonian") {
  // Characteristic polynomial by hand: the (1,3) block [[1,1],[1,1]] gives
  // {0, 2}; the decoupled middle level gives -1.
  ComplexMatrix m{{1.0, 0.0, 1.0}, {0.0, -1.0, 0.0}, {1.0, 0.0, 1.0}};
  EigenDecomposition eig = eigh(HermitianMatrix::symmetrized(m));
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(eig.eigenvalues[1]) <= 1e-12);
  CHECK(eig.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eigh reconstructs and stays unitary on random matrices") {
  std::mt19937_64 rng(21);
  for (std::size_t n : {2, 3, 4, 8}) {
    for (int it = 0; it < 250; ++it) {
      HermitianMatrix a = testing::random_hermitian(rng, n);
      EigenDecomposition eig = eigh(a);

      const double scale = std::max(1.0, a.matrix().max_abs());
      CHECK(max_abs_diff(eig.reconstruct(), a.matrix()) <= 1e-10 * scale);

      ComplexMatrix gram = eig.unitary.adjoint() * eig.unitary;
      CHECK(max_abs_diff(gram, ComplexMatrix::identity(n)) <= 1e-10);

      CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
    }
  }
}

TEST_CASE("eigh is deterministic and phase-fixed") {
  std::mt19937_64 rng(22);
  HermitianMatrix a = testing::random_hermitian(rng, 5);
  EigenDecomposition first = eigh(a);
  EigenDecomposition second = eigh(a);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(first.eigenvalues[i] == second.eigenvalues[i]);
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(first.unitary(i, j) == second.unitary(i, j));
  }
  // Largest-magnitude component of each column is real and positive.
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t k = 0; k < 5; ++k) {
      if (std::abs(first.unitary(k, col)) > best) {
        best = std::abs(first.unitary(k, col));
        imax = k;
      }
    }
    CHECK(first.unitary(imax, col).real() > 0.0);
    CHECK(std::abs(first.unitary(imax, col).imag()) <= 1e-14);
  }
}

TEST_CASE("spectral exp of the zero matrix is the identity") {
  HermitianMatrix zero = HermitianMatrix::symmetrized(ComplexMatrix(3));
  HermitianMatrix e = spectral_function(zero, SpectralFunction::Exp);
  CHECK(max_abs_diff(e.matrix(), ComplexMatrix::identity(3)) <= 1e-14);
}

TEST_CASE("spectral exp of a diagonal matrix") {
  HermitianMatrix a =
      HermitianMatrix::symmetrized(ComplexMatrix::diagonal({1, -1, 2}));
  HermitianMatrix e = spectral_function(a, SpectralFunction::Exp);
  CHECK(e.matrix()(0, 0).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(e.matrix()(1, 1).real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(e.matrix()(2, 2).real() == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
  CHECK(std::abs(e.matrix()(0, 1)) <= 1e-14);
}

TEST_CASE("spectral log projects zero modes onto the support") {
  HermitianMatrix a =
      HermitianMatrix::symmetrized(ComplexMatrix::diagonal({0.5, 0.5, 0.0}));
  HermitianMatrix l = spectral_function(a, SpectralFunction::LogOnSupport);
  CHECK(l.matrix()(0, 0).real() == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK(l.matrix()(1, 1).real() == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(l.matrix()(2, 2)) <= 1e-14);
}

TEST_CASE("spectral log rejects negative spectra") {
  HermitianMatrix a =
      HermitianMatrix::symmetrized(ComplexMatrix::diagonal({1.0, -0.5}));
  try {
    spectral_function(a, SpectralFunction::LogOnSupport);
    FAIL("expected NegativeSpectrum");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeSpectrum);
  }
}

TEST_CASE("spectral exp then eigh yields the exponentiated spectrum") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 50; ++it) {
    HermitianMatrix a = testing::random_hermitian(rng, 4);
    std::vector<double> expected = eigh(a).eigenvalues;
    for (double& v : expected) v = std::exp(v);
    std::sort(expected.begin(), expected.end());

    std::vector<double> got =
        eigh(spectral_function(a, SpectralFunction::Exp)).eigenvalues;
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("log undoes exp on strictly positive spectra") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 50; ++it) {
    HermitianMatrix a = testing::random_hermitian(rng, 3);
    HermitianMatrix round_trip = spectral_function(
        spectral_function(a, SpectralFunction::Exp),
        SpectralFunction::LogOnSupport);
    CHECK(max_abs_diff(round_trip.matrix(), a.matrix()) <= 1e-8);
  }
}
