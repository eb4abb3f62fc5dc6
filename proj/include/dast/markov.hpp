#pragma once

#include <array>
#include <cstdint>

namespace dast {

/// Four independent judgment steps; at step i a participant deviates from
/// the reference filling with probability alpha[i] and conforms with
/// 1 - alpha[i]. Each alpha must lie in [0, 0.5) so conformity dominates.
struct DeviationModel {
  std::array<double, 4> alphas{};
};

DeviationModel make_model(const std::array<double, 4>& alphas);
DeviationModel make_model(double shared_alpha);

/// Exact distribution of the number of deviating steps (Poisson binomial).
std::array<double, 5> deviation_pmf(const DeviationModel& model);

/// Empirical distribution over `participants` simulated bracket fillings.
/// Deterministic for a given seed.
std::array<double, 5> simulate(const DeviationModel& model, std::uint64_t participants,
                               std::uint64_t seed);

struct AlphaFit {
  double alpha = 0.0;
  double residual = 0.0;  // squared distance at the optimum
};

/// Shared-alpha model that best explains an observed deviation distribution:
/// minimizes the squared distance to Binomial(4, alpha) over [0, 0.5).
AlphaFit fit_alpha(const std::array<double, 5>& observed);

}  // namespace dast
