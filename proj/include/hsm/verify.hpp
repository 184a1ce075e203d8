#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hsm/params.hpp"
#include "hsm/rsb_bound.hpp"

namespace hsm {

enum class CheckStatus { pass, statistical_pass, fail };
enum class CheckRelation { leq, geq, trend_decreasing };

std::string to_string(CheckStatus status);
std::string to_string(CheckRelation relation);

struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  CheckRelation relation = CheckRelation::leq;
  double slack = 0.0;  // rhs-lhs for leq/trend, lhs-rhs for geq
  CheckStatus status = CheckStatus::fail;
};

struct CheckReport {
  nlohmann::json metadata;
  std::vector<Check> checks;

  bool all_passed() const;  // no check has status fail
  nlohmann::json to_json() const;
};

// Statistical checks pass outright when the relation holds, and are graded
// statistical-pass when it holds within this many combined standard errors.
inline constexpr double kStdErrMultiple = 3.0;

// Ferromagnet checks at one finite depth: exact free energy dominates both
// closed-form bounds pointwise on an m-grid, the nmf maximum dominates the
// mf maximum, and at beta = 0 all three collapse to log 2 + log cosh(h)
// within 1e-10. corrupt_bounds is a test hook that shifts every bound value
// upward to force failures (negative control).
CheckReport check_dhm(const ModelParams& params, int depth, int m_grid_size,
                      double corrupt_bounds = 0.0);

// Spin-glass checks across depths 1..max_depth, each graded within 3
// combined standard errors: monotone quenched means, per-step increment
// bound, annealed bound, optimized RSB bound above the estimate, and
// strictly decreasing per-instance standard deviation. corrupt_bounds
// shifts the upper bounds downward (negative control).
CheckReport check_hea(const ModelParams& params, int max_depth, int n_samples,
                      std::uint64_t seed, int rsb_levels, int workers = 1,
                      double corrupt_bounds = 0.0,
                      const QuadratureSpec& quad = {});

}  // namespace hsm
