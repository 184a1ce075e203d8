#include "hsm/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hsm/dhm_bounds.hpp"
#include "hsm/dhm_solver.hpp"
#include "hsm/gauss_hermite.hpp"
#include "hsm/hea_model.hpp"
#include "hsm/numeric.hpp"
#include "hsm/rng.hpp"

namespace hsm {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::statistical_pass: return "statistical-pass";
    case CheckStatus::fail: return "fail";
  }
  return "fail";
}

std::string to_string(CheckRelation relation) {
  switch (relation) {
    case CheckRelation::leq: return "<=";
    case CheckRelation::geq: return ">=";
    case CheckRelation::trend_decreasing: return "trend-decreasing";
  }
  return "<=";
}

bool CheckReport::all_passed() const {
  for (const Check& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json out;
  out["metadata"] = metadata;
  out["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    out["checks"].push_back({{"name", c.name},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"relation", to_string(c.relation)},
                             {"slack", c.slack},
                             {"status", to_string(c.status)}});
  }
  return out;
}

namespace {

// slack >= 0 means the relation holds; trend-decreasing demands strictness.
Check make_check(std::string name, double lhs, double rhs, CheckRelation relation,
                 double stat_tol) {
  Check c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = relation;
  c.slack = (relation == CheckRelation::geq) ? lhs - rhs : rhs - lhs;
  const bool holds =
      (relation == CheckRelation::trend_decreasing) ? c.slack > 0.0 : c.slack >= 0.0;
  if (holds)
    c.status = CheckStatus::pass;
  else if (stat_tol > 0.0 && c.slack >= -stat_tol)
    c.status = CheckStatus::statistical_pass;
  else
    c.status = CheckStatus::fail;
  return c;
}

nlohmann::json field_to_json(const FieldSpec& field) {
  return {{"kind", field.kind == FieldKind::point ? "point" : "gaussian"},
          {"mean", field.mean},
          {"std", field.effective_std()}};
}

double expected_log_2cosh(const FieldSpec& field) {
  if (field.effective_std() == 0.0)
    return std::numbers::ln2 + log_cosh(field.mean);
  const GaussHermiteRule& rule = gauss_hermite_rule(64);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * log_cosh(field.mean + field.std * rule.nodes[i]);
  return std::numbers::ln2 + acc;
}

}  // namespace

CheckReport check_dhm(const ModelParams& params, int depth, int m_grid_size,
                      double corrupt_bounds) {
  if (m_grid_size < 2)
    throw std::invalid_argument("check_dhm: m_grid_size must be at least 2");
  ModelParams p = params;
  p.depth = depth;
  validate(p, false);

  CheckReport report;
  const Depth d = Depth::finite(depth);
  const double f_exact = dhm_free_energy(p);

  double grid_max_mf = -std::numeric_limits<double>::infinity();
  double grid_max_nmf = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < m_grid_size; ++i) {
    const double m = -1.0 + 2.0 * i / (m_grid_size - 1);
    grid_max_mf = std::max(grid_max_mf, phi_mf(m, p, d));
    grid_max_nmf = std::max(grid_max_nmf, phi_nmf(m, p, d));
  }
  report.checks.push_back(make_check("dhm_f_ge_phi_mf_grid", f_exact,
                                     grid_max_mf + corrupt_bounds, CheckRelation::geq, 0.0));
  report.checks.push_back(make_check("dhm_f_ge_phi_nmf_grid", f_exact,
                                     grid_max_nmf + corrupt_bounds, CheckRelation::geq, 0.0));

  const BoundResult mf = maximize_bound(BoundKind::mf, p, d);
  const BoundResult nmf = maximize_bound(BoundKind::nmf, p, d);
  report.checks.push_back(make_check("dhm_max_phi_nmf_ge_max_phi_mf", nmf.value,
                                     mf.value + corrupt_bounds, CheckRelation::geq, 0.0));

  // at beta = 0 all three quantities reduce to log 2 + log cosh(h)
  ModelParams p0 = p;
  p0.beta = 0.0;
  const double target = std::numbers::ln2 + log_cosh(p.field.mean);
  const double err_f = std::fabs(dhm_free_energy(p0) - target);
  const double err_mf = std::fabs(maximize_bound(BoundKind::mf, p0, d).value - target);
  const double err_nmf = std::fabs(maximize_bound(BoundKind::nmf, p0, d).value - target);
  report.checks.push_back(
      make_check("dhm_beta0_f_abs_err", err_f, 1e-10, CheckRelation::leq, 0.0));
  report.checks.push_back(
      make_check("dhm_beta0_phi_mf_abs_err", err_mf, 1e-10, CheckRelation::leq, 0.0));
  report.checks.push_back(
      make_check("dhm_beta0_phi_nmf_abs_err", err_nmf, 1e-10, CheckRelation::leq, 0.0));

  report.metadata = {{"model", "dhm"},
                     {"beta", p.beta},
                     {"sigma", p.sigma},
                     {"j_coupling", p.j_coupling},
                     {"field", field_to_json(p.field)},
                     {"depth", depth},
                     {"m_grid_size", m_grid_size},
                     {"f_exact", f_exact},
                     {"corrupt_bounds", corrupt_bounds}};
  return report;
}

CheckReport check_hea(const ModelParams& params, int max_depth, int n_samples,
                      std::uint64_t seed, int rsb_levels, int workers,
                      double corrupt_bounds, const QuadratureSpec& quad) {
  if (max_depth < 1)
    throw std::invalid_argument("check_hea: max_depth must be at least 1");
  if (n_samples < 2)
    throw std::invalid_argument("check_hea: n_samples must be at least 2");
  ModelParams base = params;
  base.j_coupling = 1.0;  // the glass carries unit coupling scale
  validate(base, false);

  std::vector<QuenchedEstimate> est(max_depth + 1);
  std::vector<double> sd(max_depth + 1, 0.0);
  std::vector<double> rsb_opt(max_depth + 1, 0.0);
  for (int d = 1; d <= max_depth; ++d) {
    ModelParams pd = base;
    pd.depth = d;
    const std::vector<double> samples =
        quenched_samples(pd, n_samples, hash_combine(seed, static_cast<std::uint64_t>(d)),
                         workers);
    est[d] = estimate_from_samples(samples);
    sd[d] = sample_sd(samples);
    rsb_opt[d] = optimize_parisi(pd, rsb_levels, quad).value;
  }

  CheckReport report;
  const double beta2_over_4 = 0.25 * base.beta * base.beta;
  for (int d = 1; d < max_depth; ++d) {
    const std::string step = "_d" + std::to_string(d) + "_to_d" + std::to_string(d + 1);
    const double comb =
        std::sqrt(est[d].std_error * est[d].std_error +
                  est[d + 1].std_error * est[d + 1].std_error);
    report.checks.push_back(make_check("hea_f_monotone" + step, est[d + 1].mean,
                                       est[d].mean, CheckRelation::geq,
                                       kStdErrMultiple * comb));
    const double increment = beta2_over_4 * std::exp2((d + 1) * (1.0 - 2.0 * base.sigma));
    report.checks.push_back(make_check("hea_increment_bound" + step, est[d + 1].mean,
                                       est[d].mean + increment, CheckRelation::leq,
                                       kStdErrMultiple * comb));
    // sd of the sd estimate, Gaussian approximation
    const double sd_tol = std::sqrt((sd[d] * sd[d] + sd[d + 1] * sd[d + 1]) /
                                    (2.0 * (n_samples - 1)));
    report.checks.push_back(make_check("hea_sd_decreasing" + step, sd[d + 1], sd[d],
                                       CheckRelation::trend_decreasing,
                                       kStdErrMultiple * sd_tol));
  }
  const double field_part = expected_log_2cosh(base.field);
  for (int d = 1; d <= max_depth; ++d) {
    const std::string tag = "_d" + std::to_string(d);
    const double annealed =
        beta2_over_4 * coupling_sum_c1(base.sigma, Depth::finite(d)) + field_part;
    report.checks.push_back(make_check("hea_annealed_bound" + tag, est[d].mean,
                                       annealed - corrupt_bounds, CheckRelation::leq,
                                       kStdErrMultiple * est[d].std_error));
    report.checks.push_back(make_check("hea_rsb_ge_quenched" + tag,
                                       rsb_opt[d] - corrupt_bounds, est[d].mean,
                                       CheckRelation::geq,
                                       kStdErrMultiple * est[d].std_error));
  }

  nlohmann::json depth_rows = nlohmann::json::array();
  for (int d = 1; d <= max_depth; ++d)
    depth_rows.push_back({{"depth", d},
                          {"mean", est[d].mean},
                          {"stderr", est[d].std_error},
                          {"sample_sd", sd[d]},
                          {"rsb_bound", rsb_opt[d]}});
  report.metadata = {{"model", "hea"},
                     {"beta", base.beta},
                     {"sigma", base.sigma},
                     {"field", field_to_json(base.field)},
                     {"max_depth", max_depth},
                     {"n_samples", n_samples},
                     {"seed", seed},
                     {"rsb_levels", rsb_levels},
                     {"quadrature_nodes", quad.nodes},
                     {"stderr_multiple", kStdErrMultiple},
                     {"corrupt_bounds", corrupt_bounds},
                     {"estimates", depth_rows}};
  return report;
}

}  // namespace hsm
