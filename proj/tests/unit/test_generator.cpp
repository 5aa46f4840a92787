#include <cmath>

#include "doctest.h"
#include "qcoh/divergence.hpp"
#include "qcoh/errors.hpp"
#include "qcoh/generator.hpp"

using namespace qcoh;

namespace {

std::vector<double> grid() {
  std::vector<double> g;
  for (int k = -20; k <= 20; ++k) g.push_back(std::ldexp(1.0, k));
  return g;
}

std::vector<GeneratorFunction> all_builtins() {
  std::vector<GeneratorFunction> fs;
  for (const char* s : {"neg_log", "power:0.5", "power:1.5", "tsallis:0.5", "tsallis:1.5", "power:-0.5",
                        "power:0.3", "power:1.9", "tsallis:0.1", "tsallis:1.9"})
    fs.push_back(parse_generator(s));
  return fs;
}

}  // namespace

TEST_CASE("neg_log") {
  const auto f = builtin_neg_log();
  CHECK(f(1.0) == 0.0);
  CHECK(f(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(f.limit_at_inf_weighted(0.3).value() == 0.0);
  CHECK(f.limit_at_zero().is_infinite());
  CHECK(f.monotone_decreasing());
  CHECK(f.claims_operator_convex());
}

TEST_CASE("power family") {
  CHECK(builtin_power(0.5)(1.0) == 0.0);
  CHECK(builtin_power(0.5)(4.0) == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK_THROWS_AS(builtin_power(2.5), ParamOutOfRange);
  CHECK_THROWS_AS(builtin_power(0.0), ParamOutOfRange);
  CHECK_THROWS_AS(builtin_power(1.0), ParamOutOfRange);
  CHECK_THROWS_AS(builtin_power(-1.0), ParamOutOfRange);
  CHECK(builtin_power(0.5).name() == "power:0.5");
}

TEST_CASE("tsallis family") {
  CHECK(builtin_tsallis(0.5)(1.0) == 0.0);
  CHECK(builtin_tsallis(0.5)(4.0) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK_THROWS_AS(builtin_tsallis(1.0), ParamOutOfRange);
  CHECK_THROWS_AS(builtin_tsallis(2.0), ParamOutOfRange);
  CHECK_THROWS_AS(builtin_tsallis(0.0), ParamOutOfRange);
}

TEST_CASE("tsallis approaches neg_log as q -> 1") {
  const auto lo = builtin_tsallis(1.0 - 1e-4);
  const auto hi = builtin_tsallis(1.0 + 1e-4);
  for (const double x : grid()) {
    const double ref = -std::log(x);
    const double scale = std::max(1.0, std::abs(ref));
    CHECK(std::abs(lo(x) - ref) <= 1e-3 * scale);
    CHECK(std::abs(hi(x) - ref) <= 1e-3 * scale);
  }
}

TEST_CASE("grid invariants: normalization and convexity for every builtin") {
  for (const auto& f : all_builtins()) {
    CAPTURE(f.name());
    CHECK(std::abs(f(1.0)) <= 1e-14);
    const auto g = grid();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const double x = g[i], y = g[j];
        const double mid = f((x + y) / 2);
        const double chord = (f(x) + f(y)) / 2;
        CHECK(mid <= chord + 1e-12 * std::max(1.0, std::abs(chord)));
      }
    }
  }
}

TEST_CASE("grid monotonicity agrees with the decreasing flag") {
  for (const auto& f : all_builtins()) {
    CAPTURE(f.name());
    const auto g = grid();
    bool non_increasing = true;
    for (std::size_t i = 1; i < g.size(); ++i) non_increasing = non_increasing && f(g[i]) <= f(g[i - 1]);
    CHECK(non_increasing == f.monotone_decreasing());
  }
  // exponents above one grow without bound
  CHECK_FALSE(builtin_power(1.5).monotone_decreasing());
  CHECK(builtin_power(0.5).monotone_decreasing());
  CHECK(builtin_power(-0.5).monotone_decreasing());
  CHECK(builtin_tsallis(1.5).monotone_decreasing());
}

TEST_CASE("closed-form limits match direct evaluation") {
  // x f(c/x) at small x, and f at small argument
  for (const auto& f : all_builtins()) {
    CAPTURE(f.name());
    const double c = 0.3;
    const double x1 = 1e-20, x2 = 1e-40;
    const double w1 = x1 * f(c / x1), w2 = x2 * f(c / x2);
    const auto lim = f.limit_at_inf_weighted(c);
    if (lim.is_infinite()) {
      CHECK(w2 > w1);
      CHECK(w2 > 1e2);
    } else {
      CHECK(std::abs(w2 - lim.value()) <= std::abs(w1 - lim.value()) + 1e-12);
      CHECK(std::abs(w2 - lim.value()) < 1e-2);
    }
    const double z1 = f(1e-20), z2 = f(1e-40);
    if (f.limit_at_zero().is_infinite()) {
      CHECK(z2 > z1);
      CHECK(z2 > 10.0);
    } else {
      CHECK(std::abs(z2 - f.limit_at_zero().value()) < 1e-4);
    }
  }
}

TEST_CASE("power exponents in (-1, 0) have a vanishing weighted limit") {
  const auto f = builtin_power(-0.5);
  CHECK(f.limit_at_inf_weighted(0.7).value() == 0.0);
  CHECK(f.limit_at_zero().is_infinite());
  CHECK(builtin_power(1.5).limit_at_inf_weighted(0.7).is_infinite());
  CHECK(builtin_power(1.5).limit_at_zero().value() == doctest::Approx(1.0 / (1.5 * -0.5)).epsilon(1e-15));
}

TEST_CASE("transpose") {
  const auto t = transpose(builtin_neg_log());
  for (const double x : {0.1, 0.5, 2.0, 7.0}) CHECK(t(x) == doctest::Approx(x * std::log(x)).epsilon(1e-14));
  CHECK(t.claims_operator_convex());

  for (const auto& f : all_builtins()) {
    CAPTURE(f.name());
    const auto tf = transpose(f);
    const auto ttf = transpose(tf);
    CHECK(ttf.name() == f.name());
    for (const double x : grid()) {
      CHECK(std::abs(tf(x) - x * f(1.0 / x)) <= 1e-12 * std::max(1.0, std::abs(tf(x))));
      CHECK(std::abs(ttf(x) - f(x)) <= 1e-12 * std::max(1.0, std::abs(f(x))));
    }
    CHECK(tf.limit_at_zero() == f.asymptotic_slope());
    CHECK(tf.asymptotic_slope() == f.limit_at_zero());
  }
}

TEST_CASE("transpose swaps divergence arguments") {
  const auto rho = random_density(3, 3, 21);
  const auto sigma = random_density(3, 3, 22);
  for (const auto& f : all_builtins()) {
    CAPTURE(f.name());
    const double a = quasi_relative_entropy(rho, sigma, transpose(f)).value();
    const double b = quasi_relative_entropy(sigma, rho, f).value();
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("registry grammar") {
  CHECK(builtin_names() == std::vector<std::string>{"neg_log", "power:<p>", "tsallis:<q>"});
  CHECK(parse_generator("neg_log").name() == "neg_log");
  CHECK(parse_generator("power:0.5").params().at(0) == 0.5);
  CHECK(parse_generator("tsallis:1.5").name() == "tsallis:1.5");
  CHECK(parse_generator("~tsallis:1.5").name() == "~tsallis:1.5");
  CHECK_THROWS_AS(parse_generator("power:2.5"), ParamOutOfRange);
  CHECK_THROWS_AS(parse_generator("log"), UnknownGenerator);
  CHECK_THROWS_AS(parse_generator("power"), UnknownGenerator);
  CHECK_THROWS_AS(parse_generator("power:abc"), UnknownGenerator);
  CHECK_THROWS_AS(parse_generator("power:0.5x"), UnknownGenerator);
  CHECK_THROWS_AS(parse_generator("neg_log:1"), UnknownGenerator);
  CHECK_THROWS_AS(parse_generator(""), UnknownGenerator);
  CHECK_THROWS_AS(builtin_neg_log()(0.0), ParamOutOfRange);
  CHECK_THROWS_AS(builtin_neg_log()(-1.0), ParamOutOfRange);
}

TEST_CASE("family relations") {
  // tsallis:q = q * power:(1-q)
  for (const double q : {0.3, 0.5, 1.5}) {
    const auto t = builtin_tsallis(q);
    const auto p = builtin_power(1.0 - q);
    for (const double x : {0.01, 0.5, 3.0, 100.0}) CHECK(t(x) == doctest::Approx(q * p(x)).epsilon(1e-13));
  }
}
