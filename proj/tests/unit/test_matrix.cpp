#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qcoh/matrix.hpp"

using namespace qcoh;

namespace {

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

ComplexMatrix random_hermitian(int d, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix x(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) x(r, c) = Complex(g(rng), g(rng));
  return (x + x.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("validate accepts states and rejects broken matrices") {
  CHECK_NOTHROW(DensityMatrix::validate(identity(2) / 2.0));
  const auto plus = DensityMatrix::validate(m2(0.5, 0.5, 0.5, 0.5));
  CHECK(plus.dim() == 2);

  CHECK_THROWS_AS(DensityMatrix::validate(m2(1, 0, 0, 0.1)), TraceNotOne);
  CHECK_THROWS_AS(DensityMatrix::validate(m2(0.5, 0.3, 0.1, 0.5)), NotHermitian);
  CHECK_THROWS_AS(DensityMatrix::validate(m2(1.5, 0, 0, -0.5)), NotPositive);
  CHECK_THROWS_AS(DensityMatrix::validate(ComplexMatrix::Zero(2, 3)), NotSquare);

  try {
    DensityMatrix::validate(m2(1, 0, 0, 0.1));
  } catch (const TraceNotOne& e) {
    CHECK(e.magnitude() == doctest::Approx(0.1));
  }
}

TEST_CASE("validate repairs deviations within tolerance") {
  ComplexMatrix m = m2(0.5, 0.5, 0.5, 0.5);
  m(0, 0) += 5e-11;
  const auto rho = DensityMatrix::validate(m);
  CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) < 1e-15);
  const auto ev = hermitian_eigen(rho.matrix()).eigenvalues;
  CHECK(ev.minCoeff() >= 0.0);
}

TEST_CASE("pure states") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS((PureState{v}), NotNormalized);
  const PureState p(v / std::sqrt(2.0));
  const auto rho = p.as_density();
  CHECK(std::abs(rho(0, 1) - Complex(0.5)) < 1e-15);

  const PureState one = random_pure(1, 5);
  CHECK(std::abs(one.as_density()(0, 0) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(random_pure(4, 7).amplitudes().norm() - 1.0) < 1e-14);
}

TEST_CASE("spectral decomposition") {
  const double p[] = {0.7, 0.3};
  const auto sd = spectral_decompose(diagonal_state(p));
  CHECK(sd.eigenvalues(0) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(sd.eigenvalues(1) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(std::abs(std::abs(sd.vector(0)(0)) - 1.0) < 1e-15);

  const auto plus = spectral_decompose(DensityMatrix::validate(m2(0.5, 0.5, 0.5, 0.5)));
  CHECK(plus.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(std::abs(plus.eigenvalues(1)) < 1e-15);
  const ComplexVector v = plus.vector(0);
  CHECK(std::abs(std::abs(v(0)) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(v(0) - v(1)) < 1e-14);

  const auto rho = random_density(4, 4, 42);
  const auto sd4 = spectral_decompose(rho);
  CHECK((sd4.reconstruct() - rho.matrix()).norm() < 1e-12);
  // eigenvalues against an independent solver
  const auto ref = oracle::eigenvalues(rho.matrix());
  for (int j = 0; j < 4; ++j) CHECK(std::abs(sd4.eigenvalues(j) - ref[j]) < 1e-12);
}

TEST_CASE("spectral round trip on random Hermitian matrices") {
  Rng rng(3);
  double worst_recon = 0.0;
  double worst_orth = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int d = 1 + t % 8;
    const ComplexMatrix h = random_hermitian(d, rng);
    const auto sd = hermitian_eigen(h);
    worst_recon = std::max(worst_recon, (sd.reconstruct() - h).norm());
    worst_orth = std::max(
        worst_orth, (sd.eigenvectors.adjoint() * sd.eigenvectors - identity(d)).norm());
    for (int j = 1; j < d; ++j) REQUIRE(sd.eigenvalues(j - 1) >= sd.eigenvalues(j));
  }
  CHECK(worst_recon <= kTolRecon);
  CHECK(worst_orth <= kTolOrth);
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  CHECK(trace_norm(m2(0.5, 0, 0, -0.5)) == doctest::Approx(1.0));
  const ComplexMatrix diff = m2(0.5, 0.5, 0.5, 0.5) - identity(2) / 2.0;
  CHECK(std::abs(trace_norm(diff) - oracle::trace_norm_hermitian(diff)) < 1e-14);
  CHECK(trace_norm(diff) == doctest::Approx(1.0));

  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 4;
    const ComplexMatrix a = random_hermitian(d, rng);
    const ComplexMatrix b = random_hermitian(d, rng);
    const ComplexMatrix u = random_unitary(d, rng);
    CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-12);
    CHECK(std::abs(trace_norm(u * a * u.adjoint()) - trace_norm(a)) < 1e-12);
  }
}

TEST_CASE("tensor products") {
  const ComplexMatrix a = random_density(3, 3, 1).matrix();
  CHECK((tensor(a, identity(1)) - a).norm() == 0.0);

  ComplexMatrix da = ComplexMatrix::Zero(2, 2), db = ComplexMatrix::Zero(2, 2);
  da.diagonal() << 2.0, 3.0;
  db.diagonal() << 5.0, 7.0;
  const ComplexMatrix t = tensor(da, db);
  CHECK(t(0, 0) == Complex(10.0));
  CHECK(t(1, 1) == Complex(14.0));
  CHECK(t(2, 2) == Complex(15.0));
  CHECK(t(3, 3) == Complex(21.0));

  const ComplexMatrix b = random_density(2, 2, 2).matrix();
  const ComplexMatrix c = random_density(2, 1, 3).matrix();
  CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-15);
  CHECK((tensor(tensor(a, b), c) - tensor(a, tensor(b, c))).norm() <= 1e-14);
  CHECK((tensor(a, b) - oracle::kron(a, b)).norm() <= 1e-15);
}

TEST_CASE("random generators are deterministic and well formed") {
  CHECK((random_density(3, 3, 11).matrix() - random_density(3, 3, 11).matrix()).norm() == 0.0);
  CHECK_NOTHROW(DensityMatrix::validate(random_density(3, 3, 11).matrix()));

  const auto rho = random_density(4, 2, 5);
  int above = 0;
  for (const double x : oracle::eigenvalues(rho.matrix()))
    if (x > 1e-10) ++above;
  CHECK(above == 2);

  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 5;
    const auto r = random_density(d, 1 + t % d, rng);
    const auto ev = hermitian_eigen(r.matrix()).eigenvalues;
    CHECK(ev.minCoeff() >= -1e-9);
    CHECK(ev.maxCoeff() <= 1.0 + 1e-9);
    CHECK(std::abs(ev.sum() - 1.0) <= 1e-10);
  }

  const ComplexMatrix u = random_unitary(5, rng);
  CHECK((u.adjoint() * u - identity(5)).norm() < 1e-12);

  const auto p = random_probabilities(6, rng);
  double s = 0.0;
  for (double x : p) {
    CHECK(x > 0.0);
    s += x;
  }
  CHECK(std::abs(s - 1.0) < 1e-14);
}

TEST_CASE("Haar first moment") {
  // E|<0|psi>|^2 = 1/d with variance (d-1)/(d^2 (d+1)) per draw
  const int d = 4;
  const int n = 100000;
  Rng rng(123);
  double mean = 0.0;
  for (int t = 0; t < n; ++t) mean += std::norm(random_pure(d, rng).amplitudes()(0));
  mean /= n;
  const double sigma = std::sqrt((d - 1.0) / (d * d * (d + 1.0)) / n);
  CHECK(std::abs(mean - 1.0 / d) <= 3.0 * sigma);
}

TEST_CASE("seed mixing separates streams") {
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
  CHECK(mix_seed(7, 3) == mix_seed(7, 3));
}
