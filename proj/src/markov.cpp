#include "dast/markov.hpp"

#include <cmath>
#include <random>

#include "dast/error.hpp"

namespace dast {

namespace {

void check_alpha(double a) {
  if (!(a >= 0.0 && a < 0.5))
    throw validation_error("alpha must lie in [0, 0.5), got " + std::to_string(a));
}

/// Uniform double in [0,1) from the top 53 bits; fixed mapping keeps the
/// stream identical across standard library implementations.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::array<double, 5> binomial4(double alpha) {
  const double beta = 1.0 - alpha;
  return {beta * beta * beta * beta, 4 * alpha * beta * beta * beta,
          6 * alpha * alpha * beta * beta, 4 * alpha * alpha * alpha * beta,
          alpha * alpha * alpha * alpha};
}

double objective(double alpha, const std::array<double, 5>& observed) {
  std::array<double, 5> pmf = binomial4(alpha);
  double sum = 0.0;
  for (int k = 0; k < 5; ++k) {
    double d = pmf[k] - observed[k];
    sum += d * d;
  }
  return sum;
}

}  // namespace

DeviationModel make_model(const std::array<double, 4>& alphas) {
  for (double a : alphas) check_alpha(a);
  return DeviationModel{alphas};
}

DeviationModel make_model(double shared_alpha) {
  check_alpha(shared_alpha);
  return DeviationModel{{shared_alpha, shared_alpha, shared_alpha, shared_alpha}};
}

std::array<double, 5> deviation_pmf(const DeviationModel& model) {
  for (double a : model.alphas) check_alpha(a);
  std::array<double, 5> pmf{1.0, 0.0, 0.0, 0.0, 0.0};
  int filled = 1;
  for (double a : model.alphas) {
    for (int k = filled; k >= 1; --k) pmf[k] = pmf[k] * (1.0 - a) + pmf[k - 1] * a;
    pmf[0] *= (1.0 - a);
    ++filled;
  }
  return pmf;
}

std::array<double, 5> simulate(const DeviationModel& model, std::uint64_t participants,
                               std::uint64_t seed) {
  for (double a : model.alphas) check_alpha(a);
  if (participants == 0) throw validation_error("simulation needs participants");
  std::mt19937_64 rng(seed);
  std::array<double, 5> counts{};
  for (std::uint64_t i = 0; i < participants; ++i) {
    int deviations = 0;
    for (double a : model.alphas)
      if (next_unit(rng) < a) ++deviations;
    counts[deviations] += 1.0;
  }
  for (double& c : counts) c /= static_cast<double>(participants);
  return counts;
}

AlphaFit fit_alpha(const std::array<double, 5>& observed) {
  for (double share : observed)
    if (share < 0.0) throw validation_error("observed shares must be non-negative");

  // Golden-section search; the objective is smooth and unimodal on [0, 0.5).
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 0.5 - 1e-12;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = objective(x1, observed);
  double f2 = objective(x2, observed);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = objective(x1, observed);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = objective(x2, observed);
    }
  }
  AlphaFit fit;
  fit.alpha = (lo + hi) / 2.0;
  fit.residual = objective(fit.alpha, observed);
  return fit;
}

}  // namespace dast
