#pragma once

#include <string>
#include <vector>

namespace ljfix {

enum class Relation { near, less_than, greater_than };

/// One re-derived constant. For Relation::near the check passes when
/// |computed - expected| <= tolerance; otherwise computed is compared
/// against expected with the strict inequality.
struct CheckResult {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::near;
  bool passed = false;
};

struct NamedValue {
  std::string name;
  double value = 0.0;
};

/// Fixed-point constants, shifted-frame solutions, the deep attractive point,
/// the Lindemann ratio, M and the energy ledger, scaled by sigma1/eps1.
std::vector<NamedValue> ledger_entries(double sigma1, double eps1);

/// Re-derives every fixed-point, cascade and recursion constant against
/// independent routes (rational identities, bisection, brute-force scans).
/// Deterministic; fixed RNG seeds.
std::vector<CheckResult> run_verification();

}  // namespace ljfix
