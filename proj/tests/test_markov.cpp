#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "dast/error.hpp"
#include "dast/markov.hpp"

using namespace dast;

namespace {

/// Brute force over all 2^4 deviation patterns.
std::array<double, 5> enumerated_pmf(const std::array<double, 4>& alphas) {
  std::array<double, 5> pmf{};
  for (int mask = 0; mask < 16; ++mask) {
    double p = 1.0;
    int deviations = 0;
    for (int step = 0; step < 4; ++step) {
      if (mask & (1 << step)) {
        p *= alphas[step];
        ++deviations;
      } else {
        p *= 1.0 - alphas[step];
      }
    }
    pmf[deviations] += p;
  }
  return pmf;
}

}  // namespace

TEST_CASE("model construction validates the deviation probabilities") {
  DeviationModel m = make_model(0.2);
  for (double a : m.alphas) CHECK(a == 0.2);
  CHECK_THROWS_AS(make_model(0.5), Error);   // conformity must dominate
  CHECK_THROWS_AS(make_model(-0.1), Error);
  CHECK_THROWS_AS(make_model({0.1, 0.2, 0.3, 0.7}), Error);
}

TEST_CASE("the exact distribution matches brute-force enumeration") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> pick(0.0, 0.499);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<double, 4> alphas;
    for (double& a : alphas) a = pick(rng);
    std::array<double, 5> exact = deviation_pmf(make_model(alphas));
    std::array<double, 5> brute = enumerated_pmf(alphas);
    double sum = 0.0;
    for (int k = 0; k <= 4; ++k) {
      CHECK(exact[k] == doctest::Approx(brute[k]).epsilon(1e-12));
      sum += exact[k];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("shared alpha reduces to a binomial") {
  std::array<double, 5> pmf = deviation_pmf(make_model(0.25));
  for (int k = 0; k <= 4; ++k) {
    double binom = 1.0;
    const double choose[5] = {1, 4, 6, 4, 1};
    binom = choose[k] * std::pow(0.25, k) * std::pow(0.75, 4 - k);
    CHECK(pmf[k] == doctest::Approx(binom).epsilon(1e-12));
  }
}

TEST_CASE("simulation is seed-deterministic and converges to the pmf") {
  DeviationModel model = make_model({0.1, 0.2, 0.05, 0.3});
  std::array<double, 5> once = simulate(model, 50000, 42);
  std::array<double, 5> again = simulate(model, 50000, 42);
  CHECK(once == again);

  std::array<double, 5> exact = deviation_pmf(model);
  std::array<double, 5> big = simulate(model, 1000000, 7);
  for (int k = 0; k <= 4; ++k) CHECK(std::abs(big[k] - exact[k]) < 0.01);

  CHECK_THROWS_AS(simulate(model, 0, 1), Error);
}

TEST_CASE("alpha fitting inverts the exact distribution") {
  for (double alpha : {0.05, 0.17, 0.25, 0.4}) {
    CAPTURE(alpha);
    AlphaFit fit = fit_alpha(deviation_pmf(make_model(alpha)));
    CHECK(std::abs(fit.alpha - alpha) < 1e-6);
    CHECK(fit.residual < 1e-12);
  }
}

TEST_CASE("alpha fitting minimizes the squared distance on a grid") {
  // An observed distribution that no single alpha reproduces exactly.
  std::array<double, 5> observed = {0.5, 0.3, 0.1, 0.06, 0.04};
  AlphaFit fit = fit_alpha(observed);
  auto loss = [&](double a) {
    std::array<double, 5> pmf = deviation_pmf(make_model(a));
    double s = 0.0;
    for (int k = 0; k <= 4; ++k) s += (pmf[k] - observed[k]) * (pmf[k] - observed[k]);
    return s;
  };
  CHECK(fit.residual == doctest::Approx(loss(fit.alpha)).epsilon(1e-9));
  for (double a = 0.001; a < 0.5; a += 0.001)
    CHECK(loss(fit.alpha) <= loss(a) + 1e-9);
}
