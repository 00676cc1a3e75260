#include <doctest.h>

#include <cmath>
#include <limits>

#include "qentro/matrix.hpp"
#include "test_support.hpp"

using namespace qentro;

TEST_CASE("validate_hermitian accepts the identity with zero correction") {
  HermitianMatrix h = validate_hermitian(ComplexMatrix::identity(3), 1e-8);
  CHECK(h.dim() == 3);
  CHECK(h.correction() == 0.0);
  CHECK(max_abs_diff(h.matrix(), ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("validate_hermitian accepts conjugate off-diagonals") {
  const Complex i(0.0, 1.0);
  ComplexMatrix m{{1.0, i}, {-i, 1.0}};
  HermitianMatrix h = validate_hermitian(m, 1e-8);
  CHECK(h.correction() == 0.0);
  CHECK(h.matrix()(0, 1) == i);
}

TEST_CASE("validate_hermitian rejects an upper-triangular matrix") {
  ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(validate_hermitian(m, 1e-8), Error);
  try {
    validate_hermitian(m, 1e-8);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
}

TEST_CASE("validate_hermitian rejects NaN entries") {
  ComplexMatrix m(2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  try {
    validate_hermitian(m, 1e-8);
    FAIL("expected NonFinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFinite);
  }
}

TEST_CASE("validate_hermitian records the symmetrization correction") {
  // Asymmetry 2e-9 on a unit-scale matrix is within tol = 1e-8.
  ComplexMatrix m{{1.0, Complex(0.5, 1e-9)}, {Complex(0.5, 1e-9), 1.0}};
  HermitianMatrix h = validate_hermitian(m, 1e-8);
  CHECK(h.correction() == doctest::Approx(1e-9).epsilon(1e-3));
  CHECK(h.matrix()(0, 1).imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("trace_product on identities and diagonals") {
  ComplexMatrix eye = ComplexMatrix::identity(3);
  CHECK(trace_product(eye, eye).real() == doctest::Approx(3.0));

  ComplexMatrix a = ComplexMatrix::diagonal({1, 2, 3});
  ComplexMatrix b = ComplexMatrix::diagonal({4, 5, 6});
  CHECK(trace_product(a, b).real() == doctest::Approx(32.0));
}

TEST_CASE("trace_product of the worked state and Hamiltonian at b = 0") {
  ComplexMatrix rho = ComplexMatrix::diagonal({1.0 / 3, 1.0 / 3, 1.0 / 3});
  ComplexMatrix ham{{1.0, 0.0, 1.0}, {0.0, -1.0, 0.0}, {1.0, 0.0, 1.0}};
  CHECK(trace_product(rho, ham).real() == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("trace_product rejects mismatched dimensions") {
  try {
    trace_product(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("trace_product is cyclic on random pairs") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 2 + it % 7;
    ComplexMatrix a = testing::random_complex(rng, n);
    ComplexMatrix b = testing::random_complex(rng, n);
    const Complex ab = trace_product(a, b);
    const Complex ba = trace_product(b, a);
    CHECK(std::abs(ab - ba) <= 1e-12);
  }
}

TEST_CASE("trace_product of Hermitian pairs has vanishing imaginary part") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    ComplexMatrix a = testing::random_hermitian(rng, 4).matrix();
    ComplexMatrix b = testing::random_hermitian(rng, 4).matrix();
    CHECK(std::abs(trace_product(a, b).imag()) <= 1e-10);
  }
}

TEST_CASE("symmetrized output is exactly Hermitian") {
  std::mt19937_64 rng(13);
  ComplexMatrix m = testing::random_complex(rng, 5);
  HermitianMatrix h = HermitianMatrix::symmetrized(m);
  CHECK(hermiticity_residual(h.matrix()) == 0.0);
  for (std::size_t i = 0; i < 5; ++i) CHECK(h.matrix()(i, i).imag() == 0.0);
}

TEST_CASE("matrix dimension zero is rejected") {
  CHECK_THROWS_AS(ComplexMatrix(0), Error);
}
