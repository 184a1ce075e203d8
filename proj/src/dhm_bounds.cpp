#include "hsm/dhm_bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hsm/numeric.hpp"

namespace hsm {

std::string to_string(BoundKind kind) {
  return kind == BoundKind::mf ? "mf" : "nmf";
}

namespace {

void check_phi_args(double m, const ModelParams& params) {
  if (!(std::fabs(m) <= 1.0))
    throw std::domain_error("phi bound: m must lie in [-1, 1]");
  if (params.field.kind != FieldKind::point)
    throw std::invalid_argument("phi bound: field must be a point mass");
}

}  // namespace

double phi_mf(double m, const ModelParams& params, Depth depth) {
  check_phi_args(m, params);
  validate(params, depth.is_infinite());
  const double c1 = coupling_sum_c1(params.sigma, depth);
  const double c2 = coupling_sum_c2(params.sigma, depth);
  const double bj = params.beta * params.j_coupling;
  return std::numbers::ln2 + log_cosh(bj * c1 * m + params.field.mean) -
         0.5 * bj * (c1 * m * m + c2);
}

double phi_nmf(double m, const ModelParams& params, Depth depth) {
  check_phi_args(m, params);
  validate(params, depth.is_infinite());
  const double coeff = coupling_sum_c1(params.sigma, depth) -
                       coupling_sum_c2(params.sigma, depth);
  const double bj = params.beta * params.j_coupling;
  return std::numbers::ln2 + log_cosh(bj * coeff * m + params.field.mean) -
         0.5 * bj * coeff * m * m;
}

double phi_bound(BoundKind kind, double m, const ModelParams& params, Depth depth) {
  return kind == BoundKind::mf ? phi_mf(m, params, depth) : phi_nmf(m, params, depth);
}

BoundResult maximize_bound(BoundKind kind, const ModelParams& params, Depth depth) {
  validate(params, depth.is_infinite());
  if (params.field.kind != FieldKind::point)
    throw std::invalid_argument("maximize_bound: field must be a point mass");
  const double h = params.field.mean;
  const auto phi = [&](double m) { return phi_bound(kind, m, params, depth); };

  // 201-point uniform grid on [-1, 1]. Candidates are visited in order of
  // increasing |m| with strict improvement only, so flat stretches and the
  // symmetric pair below the transition resolve to the smallest |m|. At
  // h = 0 the objective is even and unimodal on [0, 1], so the negative
  // half is skipped entirely.
  constexpr double kStep = 0.01;
  std::vector<double> candidates;
  candidates.reserve(201);
  candidates.push_back(0.0);
  for (int i = 1; i <= 100; ++i) {
    candidates.push_back(i * kStep);
    if (h != 0.0) candidates.push_back(-i * kStep);
  }
  double best_m = candidates.front();
  double best_v = phi(best_m);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double v = phi(candidates[i]);
    if (v > best_v) {
      best_v = v;
      best_m = candidates[i];
    }
  }

  // golden-section refinement inside the bracketing grid cell pair
  const double lo_limit = (h == 0.0) ? 0.0 : -1.0;
  double lo = std::max(lo_limit, best_m - kStep);
  double hi = std::min(1.0, best_m + kStep);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = phi(x1);
  double f2 = phi(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = phi(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = phi(x1);
    }
  }
  double m_star = 0.5 * (lo + hi);
  double value = phi(m_star);
  if (best_v > value) {
    m_star = best_m;
    value = best_v;
  }
  if (h == 0.0) m_star = std::fabs(m_star);
  return BoundResult{kind, m_star, value, depth};
}

double beta_critical(BoundKind kind, double sigma, double j_coupling) {
  if (!(sigma > 0.5) || !(sigma <= 1.0))
    throw std::domain_error("beta_critical: sigma must lie in (1/2, 1]");
  if (!(j_coupling > 0.0))
    throw std::invalid_argument("beta_critical: j_coupling must be positive");
  const double x = std::exp2(2.0 * sigma);
  const double bc = (kind == BoundKind::mf) ? 0.5 * x - 1.0 : 2.0 / x - 3.0 + x;
  return bc / j_coupling;
}

double detect_transition_beta(BoundKind kind, double sigma, double j_coupling,
                              double beta_hi, double tol_beta) {
  if (!(beta_hi > 0.0) || !(tol_beta > 0.0))
    throw std::invalid_argument("detect_transition_beta: beta_hi and tol_beta must be positive");
  ModelParams p;
  p.sigma = sigma;
  p.j_coupling = j_coupling;
  p.beta = 0.0;
  p.field = {};
  const auto ordered = [&](double beta) {
    ModelParams q = p;
    q.beta = beta;
    return maximize_bound(kind, q, Depth::infinite()).m_star > 1e-6;
  };
  if (!ordered(beta_hi))
    throw std::invalid_argument("detect_transition_beta: no transition at or below beta_hi");
  double lo = 0.0;  // beta = 0 gives a constant objective, maximizer 0
  double hi = beta_hi;
  while (hi - lo > tol_beta) {
    const double mid = 0.5 * (lo + hi);
    (ordered(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hsm
