#pragma once

// 12-6 Lennard-Jones curve and its reduced variable chi = (sigma/q)^6.
//
// Potential levels are signed: a crossing level u_c lives in (-epsilon, 0).
// The "depth" convention U_c in (0, epsilon) maps as depth = -u_c.

namespace ljfix {

class PotentialSpec {
 public:
  /// Throws ArgumentError unless sigma > 0 and epsilon > 0 (both finite).
  PotentialSpec(double sigma, double epsilon);

  double sigma() const noexcept { return sigma_; }
  double epsilon() const noexcept { return epsilon_; }

  /// Radius of the well bottom, 2^(1/6) sigma.
  double minimum_radius() const noexcept;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  double sigma_;
  double epsilon_;
};

/// The two radii at which a curve attains the level u_c.
struct CrossingPair {
  double u_c = 0.0;
  double q_left = 0.0;   // repulsive branch, q < 2^(1/6) sigma
  double q_right = 0.0;  // attractive branch, q > 2^(1/6) sigma
};

/// Reduced map f(chi) = -4 chi (1 - chi), in units of epsilon.
constexpr double f_reduced(double chi) noexcept { return -4.0 * chi * (1.0 - chi); }

/// Derivative f'(chi) = 8 chi - 4.
constexpr double f_reduced_slope(double chi) noexcept { return 8.0 * chi - 4.0; }

/// (sigma/q)^6. Throws DomainError for q <= 0.
double chi_of(const PotentialSpec& spec, double q);

/// sigma * chi^(-1/6). Throws DomainError for chi <= 0.
double q_of_chi(const PotentialSpec& spec, double chi);

/// 4 epsilon [(sigma/q)^12 - (sigma/q)^6]. Throws DomainError for q <= 0.
double evaluate(const PotentialSpec& spec, double q);

/// Both radii where the curve equals u_c, from the closed-form roots of the
/// quadratic in chi. Requires -epsilon < u_c < 0; u_c == -epsilon raises
/// DegenerateLevelError, anything else outside raises LevelOutOfRangeError.
CrossingPair crossings(const PotentialSpec& spec, double u_c);

}  // namespace ljfix
