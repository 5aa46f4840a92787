#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qcoh/channels.hpp"
#include "qcoh/coherence.hpp"

using namespace qcoh;

namespace {

DensityMatrix plus_state() { return max_coherent_state(2).as_density(); }

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

GioChannel full_dephasing_gio() {
  ComplexMatrix k(2, 2);
  k << 1, 0, 0, 1;
  return GioChannel::from_coefficients(k);
}

double map_distance(const KrausMap& a, const KrausMap& b, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const auto rho = random_density(a.dim(), a.dim(), rng);
    worst = std::max(worst, (a.apply(rho.matrix()) - b.apply(rho.matrix())).norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(KrausChannel(2, {identity(2), identity(2)}), NotTracePreserving);
  CHECK_THROWS(KrausChannel(2, {}));
  CHECK_THROWS_AS(KrausChannel(2, {identity(3)}), DimensionMismatch);
  const double w[] = {0.5, 0.6};
  CHECK_THROWS_AS(diagonal_unitary_mixture(w, Eigen::MatrixXd::Zero(2, 2)), BadWeights);
  const double neg[] = {1.5, -0.5};
  CHECK_THROWS_AS(diagonal_unitary_mixture(neg, Eigen::MatrixXd::Zero(2, 2)), BadWeights);
}

TEST_CASE("named channels act as expected") {
  Rng rng(1);
  const auto rho = random_density(3, 3, rng);
  CHECK((identity_channel(3).apply(rho).matrix() - rho.matrix()).norm() < 1e-15);
  CHECK((dephasing_channel(3).apply(rho).matrix() - dephase(rho).matrix()).norm() < 1e-15);
  CHECK((depolarizing_channel(3).apply(rho).matrix() - identity(3) / 3.0).norm() < 1e-15);
  CHECK((erasure_channel(3).apply(rho).matrix() - basis_state(3, 0).matrix()).norm() < 1e-15);
  CHECK_THROWS_AS(identity_channel(2).apply(rho), DimensionMismatch);
}

TEST_CASE("every constructed channel is complete and maps states to states") {
  Rng rng(2);
  std::vector<KrausChannel> chs = {identity_channel(3), dephasing_channel(3), depolarizing_channel(3),
                                   erasure_channel(3), random_unital_channel(3, 3, rng),
                                   random_channel(3, 2, rng), random_gio(3, 4, rng).channel()};
  for (const auto& ch : chs) {
    CAPTURE(ch.label());
    CHECK(ch.map().completeness_defect() <= 1e-10);
    for (int t = 0; t < 20; ++t) {
      const auto out = ch.apply(random_density(3, 1 + t % 3, rng));
      CHECK(std::abs(out.matrix().trace() - Complex(1.0)) <= 1e-10);
    }
  }
}

TEST_CASE("duals") {
  Rng rng(3);
  CHECK(map_distance(dual(identity_channel(3)), identity_channel(3).map(), rng) < 1e-15);
  CHECK(map_distance(dual(dephasing_channel(3)), dephasing_channel(3).map(), rng) < 1e-15);
  const auto ch = random_channel(3, 3, rng);
  CHECK(map_distance(dual(dual(ch)), ch.map(), rng) < 1e-14);
  // dual of a trace-preserving map is unital
  CHECK(dual(ch).unitality_defect() <= 1e-10);
  // Hilbert-Schmidt adjoint: Tr(Y* L(X)) = Tr(L*(Y)* X)
  const ComplexMatrix x = random_density(3, 3, rng).matrix();
  const ComplexMatrix y = random_density(3, 3, rng).matrix();
  const Complex lhs = (y.adjoint() * ch.apply(x)).trace();
  const Complex rhs = (dual(ch).apply(y).adjoint() * x).trace();
  CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("selective outcomes") {
  Rng rng(4);
  const auto u = unitary_channel(random_unitary(3, rng));
  const auto rho = random_density(3, 3, rng);
  const auto outs = selective_outcomes(u, rho);
  REQUIRE(outs.size() == 1);
  CHECK(outs[0].probability == doctest::Approx(1.0).epsilon(1e-14));

  const auto deph = selective_outcomes(dephasing_channel(2), plus_state());
  REQUIRE(deph.size() == 2);
  for (int n = 0; n < 2; ++n) {
    CHECK(deph[n].probability == doctest::Approx(0.5).epsilon(1e-15));
    REQUIRE(deph[n].post_state);
    CHECK((deph[n].post_state->matrix() - basis_state(2, n).matrix()).norm() < 1e-15);
  }

  // zero-probability outcome carries no post-state
  const auto zero = selective_outcomes(dephasing_channel(2), basis_state(2, 0));
  REQUIRE(zero.size() == 2);
  CHECK(zero[1].probability == 0.0);
  CHECK_FALSE(zero[1].post_state.has_value());

  for (int t = 0; t < 500; ++t) {
    const int d = 2 + t % 3;
    const auto ch = random_channel(d, 1 + t % 4, rng);
    double s = 0.0;
    for (const auto& o : selective_outcomes(ch, random_density(d, d, rng))) s += o.probability;
    CHECK(std::abs(s - 1.0) <= 1e-10);
  }
}

TEST_CASE("GIO and SIO classification") {
  Rng rng(5);
  const auto g = random_gio(3, 2, rng);
  CHECK(is_gio(g.channel(), 1e-10));
  CHECK(is_sio(g.channel(), 1e-10));
  CHECK_FALSE(is_gio(depolarizing_channel(2), 1e-10));
  CHECK(is_gio(dephasing_channel(3), 1e-10));
  CHECK_FALSE(is_sio(unitary_channel(hadamard()), 1e-10));
  CHECK(is_sio(unitary_channel(identity(2)), 1e-10));

  for (int d = 2; d <= 3; ++d) {
    CHECK_FALSE(is_gio(depolarizing_extension(d), 1e-10));
    CHECK(is_sio(depolarizing_extension(d), 1e-10));
    CHECK_FALSE(is_gio(erasure_extension(d), 1e-10));
    CHECK(is_sio(erasure_extension(d), 1e-10));
  }
  CHECK_THROWS_AS(GioChannel::from_channel(depolarizing_channel(2)), NotGio);
  CHECK_NOTHROW(GioChannel::from_channel(dephasing_channel(3)));

  for (int t = 0; t < 100; ++t) {
    const int d = 2 + t % 4;
    const auto ch = random_gio(d, 1 + t % (d + 1), rng);
    CHECK(is_sio(ch.channel(), 1e-10));
    const auto delta = diagonal_state(random_probabilities(d, rng));
    CHECK(trace_norm(ch.apply(delta).matrix() - delta.matrix()) <= 1e-10);
    const auto rho = random_density(d, d, rng);
    CHECK(trace_norm(dephase(ch.apply(rho)).matrix() - dephase(rho).matrix()) <= 1e-10);
    for (int n = 0; n < d; ++n) CHECK(std::abs(ch.coefficients().col(n).squaredNorm() - 1.0) <= 1e-10);
  }
}

TEST_CASE("single-Kraus GIO is a diagonal unitary") {
  Rng rng(6);
  const auto g = random_gio(4, 1, rng);
  const ComplexMatrix k = g.channel().ops()[0];
  CHECK((k.adjoint() * k - identity(4)).norm() < 1e-14);
}

TEST_CASE("diagonal unitary mixtures") {
  const double one[] = {1.0};
  const auto id = diagonal_unitary_mixture(one, Eigen::MatrixXd::Zero(1, 3));
  const auto rho = random_density(3, 3, 8);
  CHECK((id.apply(rho).matrix() - rho.matrix()).norm() < 1e-15);

  // phases (0,0) and (0,pi) with equal weights kill the off-diagonal
  Eigen::MatrixXd ph(2, 2);
  ph << 0, 0, 0, std::numbers::pi;
  const double half[] = {0.5, 0.5};
  const auto m = diagonal_unitary_mixture(half, ph);
  const auto r2 = random_density(2, 2, 9);
  ComplexMatrix expect = r2.matrix();
  const Complex phase = 0.5 * (1.0 + std::polar(1.0, -std::numbers::pi));
  expect(0, 1) *= phase;
  expect(1, 0) *= std::conj(phase);
  CHECK((m.apply(r2).matrix() - expect).norm() < 1e-15);
  CHECK(std::abs(m.apply(r2)(0, 1)) < 1e-15);
  CHECK(is_gio(m.channel(), 1e-12));
}

TEST_CASE("tensor extensions used for the SIO construction") {
  Rng rng(10);
  for (int d = 2; d <= 3; ++d) {
    const auto rho = random_density(d, d, rng);
    const ComplexMatrix zero = basis_state(d, 0).matrix();
    const ComplexMatrix mixed = identity(d) / double(d);
    const auto a = DensityMatrix::validate(oracle::kron(rho.matrix(), zero));
    const auto b = DensityMatrix::validate(oracle::kron(rho.matrix(), mixed));
    CHECK((depolarizing_extension(d).apply(a).matrix() - b.matrix()).norm() < 1e-14);
    CHECK((erasure_extension(d).apply(b).matrix() - a.matrix()).norm() < 1e-14);
    CHECK(depolarizing_extension(d).label() == "depol-ext:" + std::to_string(d));
  }
  CHECK_THROWS_AS(depolarizing_extension(1), DimensionMismatch);
}

TEST_CASE("Petz recovery") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + t % 3;
    const auto ch = random_unital_channel(d, 1 + t % 3, rng);
    const auto adj = dual(ch);
    const auto r_id = petz_recovery(ch, identity(d));
    const auto r_mixed = petz_recovery(ch, maximally_mixed(d));
    const ComplexMatrix w = random_density(d, d, rng).matrix();
    CHECK((r_id.apply(w) - adj.apply(w)).norm() <= 1e-10);
    CHECK((r_mixed.apply(ch.apply(w)) - adj.apply(ch.apply(w))).norm() <= 1e-10);

    // R_sigma(L(sigma)) = sigma for any full-rank sigma and channel
    const auto gen = random_channel(d, 2, rng);
    const auto sigma = random_density(d, d, rng);
    const auto r = petz_recovery(gen, sigma);
    CHECK((r.apply(gen.apply(sigma.matrix())) - sigma.matrix()).norm() <= 1e-10);
  }
  const auto r = petz_recovery(identity_channel(3), random_density(3, 3, rng));
  const ComplexMatrix w = random_density(3, 3, rng).matrix();
  CHECK((r.apply(w) - w).norm() <= 1e-10);
  CHECK_THROWS_AS(petz_recovery(identity_channel(2), basis_state(2, 0)), SingularState);
}

TEST_CASE("saturation check") {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_gio(3, 3, rng);
    const auto inc = diagonal_state(random_probabilities(3, rng));
    CHECK(gio_saturation_check(g, inc, 1e-12).saturates);
    const auto u = random_gio(3, 1, rng);
    CHECK(gio_saturation_check(u, random_density(3, 3, rng), 1e-12).saturates);
  }
  const auto res = gio_saturation_check(full_dephasing_gio(), plus_state(), 1e-12);
  CHECK_FALSE(res.saturates);
  REQUIRE(res.witness);
  CHECK(res.witness->value == doctest::Approx(0.0));
  CHECK_FALSE(gio_saturation_check(dephasing_channel(2), plus_state(), 1e-12).saturates);
}

TEST_CASE("recovery defect") {
  CHECK(recovery_defect(full_dephasing_gio().channel(), plus_state()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(recovery_defect(full_dephasing_gio().channel(), plus_state()) ==
        doctest::Approx(dephasing_distance(plus_state())).epsilon(1e-14));
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_gio(3, 2, rng);
    CHECK(recovery_defect(g.channel(), diagonal_state(random_probabilities(3, rng))) <= 1e-12);
    const auto u = random_gio(3, 1, rng);
    const auto rho = random_density(3, 3, rng);
    CHECK(gio_saturation_check(u, rho, 1e-12).saturates);
    CHECK(recovery_defect(u.channel(), rho) <= 1e-8);
  }
  CHECK_THROWS_AS(recovery_defect(erasure_channel(2), plus_state()), NotUnital);
}
