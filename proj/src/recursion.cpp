#include "ljfix/recursion.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "ljfix/constants.hpp"
#include "ljfix/error.hpp"
#include "ljfix/potential.hpp"

namespace ljfix {

double step_exact(double chi, double delta) noexcept {
  return delta * (f_reduced_slope(chi) + 4.0 * delta);
}

double step_linear(double chi, double delta) noexcept { return f_reduced_slope(chi) * delta; }

FluctuationTrajectory iterate(double chi, double delta0, int n_steps, StepMode mode) {
  if (n_steps < 1) {
    throw ArgumentError("n_steps must be at least 1, got " + std::to_string(n_steps));
  }
  FluctuationTrajectory traj;
  traj.mode = mode;
  traj.base_chi = chi;
  traj.steps.reserve(static_cast<std::size_t>(n_steps) + 1);

  double delta = delta0;
  for (int i = 0;; ++i) {
    traj.steps.push_back({i, delta, f_reduced(chi + delta)});
    if (!(std::abs(delta) <= kDivergenceCutoff)) {
      traj.terminated_by = Termination::diverged;
      break;
    }
    if (i == n_steps) break;
    delta = mode == StepMode::exact ? step_exact(chi, delta) : step_linear(chi, delta);
  }
  return traj;
}

StabilityReport stability_at(double chi) noexcept {
  StabilityReport report;
  report.chi = chi;
  report.slope = f_reduced_slope(chi);
  report.s = std::abs(report.slope);
  if (std::abs(report.s - 1.0) <= kMarginalTolerance) {
    report.classification = Stability::marginal;
  } else if (report.s < 1.0) {
    report.classification = Stability::contracting;
  } else {
    report.classification = Stability::expanding;
  }
  return report;
}

BifurcationConstants bifurcation_constants() noexcept {
  using namespace exact;
  return {to_double<ChiPlus>(), to_double<ChiMinus>(), to_double<FixedPoint>(),
          {to_double<ChiWell>(), to_double<DeepPoint>()}, to_double<Qiee>()};
}

double self_similar_residual(double chi_shifted) noexcept {
  // shifted parabola f'(x) = f(x + 1/2) + 17/16 = 4 x^2 + 1/16, slope 8 x
  const double f_shifted = 4.0 * chi_shifted * chi_shifted + 1.0 / 16.0;
  return 8.0 * chi_shifted - f_shifted / chi_shifted;
}

namespace {

double solve_bracketed(double lo, double hi) {
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      [](double x) { return self_similar_residual(x); }, lo, hi,
      boost::math::tools::eps_tolerance<double>(), max_iter);
  return 0.5 * (a + b);
}

}  // namespace

std::array<ReducedPoint, 2> self_similar_points() {
  constexpr double inner = 1e-4;
  constexpr double outer = 0.5;
  std::array<ReducedPoint, 2> out;
  const double neg = solve_bracketed(-outer, -inner);
  const double pos = solve_bracketed(inner, outer);
  out[0] = {neg, 4.0 * neg * neg + 1.0 / 16.0};
  out[1] = {pos, 4.0 * pos * pos + 1.0 / 16.0};
  return out;
}

ReducedPoint from_shifted_frame(ReducedPoint shifted) noexcept {
  return {shifted.chi + exact::to_double<exact::ChiWell>(),
          shifted.f - exact::to_double<exact::ShiftF>()};
}

ReducedPoint tangent_intersection() noexcept {
  const double x1 = exact::to_double<exact::ChiPlus>();
  const double x2 = exact::to_double<exact::ChiMinus>();
  const double m1 = f_reduced_slope(x1);
  const double m2 = f_reduced_slope(x2);
  const double y1 = f_reduced(x1);
  const double y2 = f_reduced(x2);
  // y1 + m1 (x - x1) = y2 + m2 (x - x2)
  const double x = (y2 - y1 + m1 * x1 - m2 * x2) / (m1 - m2);
  return {x, y1 + m1 * (x - x1)};
}

const char* to_string(StepMode mode) noexcept {
  return mode == StepMode::exact ? "exact" : "linearized";
}

const char* to_string(Termination t) noexcept {
  return t == Termination::completed ? "completed" : "diverged";
}

const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::contracting: return "contracting";
    case Stability::marginal: return "marginal";
    case Stability::expanding: return "expanding";
  }
  return "unknown";
}

}  // namespace ljfix
