#pragma once

#include <array>
#include <vector>

// Fluctuation recursion on the reduced map f(chi) = -4 chi (1 - chi):
//   exact:      d' = f(chi + d) - f(chi) = d (8 chi - 4 + 4 d)
//   linearized: d' = f'(chi) d          = (8 chi - 4) d
// chi stays fixed; the recursion index counts iterations only.

namespace ljfix {

enum class StepMode { exact, linearized };

enum class Termination { completed, diverged };

/// Iteration stops once |delta| exceeds this.
inline constexpr double kDivergenceCutoff = 0.5;

/// Tolerance on |s - 1| for a marginal classification.
inline constexpr double kMarginalTolerance = 1e-12;

struct FluctuationStep {
  int index = 0;
  double delta = 0.0;
  double f_value = 0.0;  // f(base_chi + delta)
};

struct FluctuationTrajectory {
  StepMode mode = StepMode::exact;
  double base_chi = 0.0;
  std::vector<FluctuationStep> steps;
  Termination terminated_by = Termination::completed;
};

enum class Stability { contracting, marginal, expanding };

struct StabilityReport {
  double chi = 0.0;
  double slope = 0.0;  // f'(chi)
  double s = 0.0;      // |slope|
  Stability classification = Stability::contracting;
};

/// A point in the (chi, f) plane, or in the shifted (chi', f') frame.
struct ReducedPoint {
  double chi = 0.0;
  double f = 0.0;
};

struct BifurcationConstants {
  double chi_plus = 0.0;
  double chi_minus = 0.0;
  double u_c_star = 0.0;
  ReducedPoint deep_point;
  double qiee = 0.0;
};

double step_exact(double chi, double delta) noexcept;
double step_linear(double chi, double delta) noexcept;

/// Applies the chosen step n_steps times from delta0. The recorded steps
/// start with delta0 at index 0; a step whose |delta| exceeds the cutoff is
/// recorded and ends the trajectory as diverged. Throws ArgumentError for
/// n_steps < 1.
FluctuationTrajectory iterate(double chi, double delta0, int n_steps, StepMode mode);

StabilityReport stability_at(double chi) noexcept;

BifurcationConstants bifurcation_constants() noexcept;

/// Solves d f'/d chi' = f'/chi' in the frame chi' = chi - 1/2, f' = f + 17/16
/// with a bracketed root finder on each side of the origin. Returns the
/// negative root first.
std::array<ReducedPoint, 2> self_similar_points();

/// Residual 8 chi' - f'(chi')/chi' of the self-similar condition.
double self_similar_residual(double chi_shifted) noexcept;

ReducedPoint from_shifted_frame(ReducedPoint shifted) noexcept;

/// Intersection of the tangents to f at chi = 3/8 and chi = 5/8.
ReducedPoint tangent_intersection() noexcept;

const char* to_string(StepMode mode) noexcept;
const char* to_string(Termination t) noexcept;
const char* to_string(Stability s) noexcept;

}  // namespace ljfix
