#include "hsm/rsb_bound.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hsm/gauss_hermite.hpp"
#include "hsm/numeric.hpp"

namespace hsm {

void ParisiParams::validate() const {
  const int k = levels();
  if (k < 1) throw std::invalid_argument("ParisiParams: need at least one level");
  if (m.size() != q.size() + 1)
    throw std::invalid_argument("ParisiParams: m must have one more entry than q");
  if (q.front() != 0.0) throw std::invalid_argument("ParisiParams: q_0 must be 0");
  if (q.back() != 1.0) throw std::invalid_argument("ParisiParams: q_K must be 1");
  if (m.front() != 0.0) throw std::invalid_argument("ParisiParams: m_0 must be 0");
  if (m.back() != 1.0) throw std::invalid_argument("ParisiParams: m_{K+1} must be 1");
  if (!(m[1] > 0.0)) throw std::invalid_argument("ParisiParams: m_1 must be positive");
  for (std::size_t a = 1; a < q.size(); ++a)
    if (q[a] < q[a - 1]) throw std::invalid_argument("ParisiParams: q must be non-decreasing");
  for (std::size_t a = 1; a < m.size(); ++a)
    if (m[a] < m[a - 1]) throw std::invalid_argument("ParisiParams: m must be non-decreasing");
}

void QuadratureSpec::validate() const {
  if (nodes < 16) throw std::invalid_argument("QuadratureSpec: nodes must be at least 16");
  if (validation_nodes <= nodes)
    throw std::invalid_argument("QuadratureSpec: validation_nodes must exceed nodes");
}

namespace {

// log Z_a at a fixed prefix of Gaussian draws, entering through the
// accumulated cosh shift. Stepping a+1 -> a raises to m_{a+1}, averages over
// z_{a+1} and takes the m_{a+1}-th root, all in log space.
double recurse_log_z(const ParisiParams& pp, const GaussHermiteRule& rule,
                     double scale, int a, double shift) {
  const int k = pp.levels();
  if (a == k) return log_cosh(shift);
  const double power = pp.m[a + 1];
  const double step = scale * std::sqrt(pp.q[a + 1] - pp.q[a]);
  const int n = static_cast<int>(rule.nodes.size());
  std::vector<double> terms(n);
  for (int i = 0; i < n; ++i)
    terms[i] = rule.log_weights[i] +
               power * recurse_log_z(pp, rule, scale, a + 1, shift + step * rule.nodes[i]);
  return log_sum_exp(terms) / power;
}

double eval_log_z0(const ModelParams& params, const ParisiParams& pp,
                   const GaussHermiteRule& rule) {
  const double scale =
      params.beta * std::sqrt(coupling_sum_c1(params.sigma, Depth::finite(params.depth)));
  if (params.field.kind == FieldKind::point)
    return recurse_log_z(pp, rule, scale, 0, params.field.mean);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] *
           recurse_log_z(pp, rule, scale, 0,
                         params.field.mean + params.field.std * rule.nodes[i]);
  return acc;
}

}  // namespace

double parisi_log_z0(const ModelParams& params, const ParisiParams& pp,
                     const QuadratureSpec& quad) {
  validate(params, false);
  pp.validate();
  quad.validate();
  const double primary = eval_log_z0(params, pp, gauss_hermite_rule(quad.nodes));
  const double check = eval_log_z0(params, pp, gauss_hermite_rule(quad.validation_nodes));
  if (std::fabs(primary - check) > 1e-7)
    throw std::runtime_error(
        "parisi_log_z0: quadrature self-check disagreement " +
        format_sig17(std::fabs(primary - check)) +
        " exceeds 1e-7; raise the node counts for this beta");
  return primary;
}

double rsb_bound(const ModelParams& params, const ParisiParams& pp,
                 const QuadratureSpec& quad) {
  const double log_z0 = parisi_log_z0(params, pp, quad);
  double ladder_sum = 0.0;
  for (int a = 1; a <= pp.levels(); ++a)
    ladder_sum += (pp.m[a + 1] - pp.m[a]) * pp.q[a] * pp.q[a];
  const double c1 = coupling_sum_c1(params.sigma, Depth::finite(params.depth));
  return std::numbers::ln2 + log_z0 +
         0.25 * params.beta * params.beta * c1 * (ladder_sum - 1.0);
}

namespace {

constexpr double kMinM1 = 1e-6;

// golden-section minimum of f on [lo, hi] to interval width tol
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 > f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

ParisiParams ladder_k1(double m1) {
  return ParisiParams{{0.0, 1.0}, {0.0, m1, 1.0}};
}

ParisiParams ladder_k2(double q1, double m1, double m2) {
  return ParisiParams{{0.0, q1, 1.0}, {0.0, m1, m2, 1.0}};
}

OptimizedBound optimize_k1(const ModelParams& params, const QuadratureSpec& quad) {
  const auto value = [&](double m1) { return rsb_bound(params, ladder_k1(m1), quad); };
  double best_m1 = 1.0;
  double best_v = value(best_m1);
  for (int i = 1; i < 21; ++i) {
    const double m1 = i / 21.0;
    const double v = value(m1);
    if (v < best_v) {
      best_v = v;
      best_m1 = m1;
    }
  }
  const double lo = std::max(kMinM1, best_m1 - 1.0 / 21.0);
  const double hi = std::min(1.0, best_m1 + 1.0 / 21.0);
  const double m1 = golden_min(value, lo, hi, 1e-5);
  const double v = value(m1);
  if (v <= best_v) return {ladder_k1(m1), v};
  return {ladder_k1(best_m1), best_v};
}

OptimizedBound optimize_k2(const ModelParams& params, const QuadratureSpec& quad) {
  const auto value = [&](double q1, double m1, double m2) {
    return rsb_bound(params, ladder_k2(q1, m1, m2), quad);
  };

  // warm start: the K=1 optimum embeds exactly as (q1=1, m1=m2)
  const OptimizedBound rs = optimize_k1(params, quad);
  double bq = 1.0, bm1 = rs.ladder.m[1], bm2 = rs.ladder.m[1];
  double best = rs.value;

  for (int iq = 0; iq <= 20; ++iq) {
    const double q1 = iq / 20.0;
    for (int i = 1; i <= 21; ++i) {
      const double m1 = i / 21.0;
      for (int j = i; j <= 21; ++j) {
        const double m2 = j / 21.0;
        const double v = value(q1, m1, m2);
        if (v < best) {
          best = v;
          bq = q1;
          bm1 = m1;
          bm2 = m2;
        }
      }
    }
  }

  // cyclic coordinate descent within the feasibility box
  double dq = bq, dm1 = bm1, dm2 = bm2;
  for (int sweep = 0; sweep < 40; ++sweep) {
    double moved = 0.0;
    {
      const double q1 = golden_min([&](double q) { return value(q, dm1, dm2); }, 0.0, 1.0, 1e-5);
      moved = std::max(moved, std::fabs(q1 - dq));
      dq = q1;
    }
    {
      const double m1 =
          golden_min([&](double m) { return value(dq, m, dm2); }, kMinM1, dm2, 1e-5);
      moved = std::max(moved, std::fabs(m1 - dm1));
      dm1 = m1;
    }
    {
      const double m2 =
          golden_min([&](double m) { return value(dq, dm1, m); }, dm1, 1.0, 1e-5);
      moved = std::max(moved, std::fabs(m2 - dm2));
      dm2 = m2;
    }
    if (moved < 1e-4) break;
  }
  const double refined = value(dq, dm1, dm2);
  if (refined <= best) return {ladder_k2(dq, dm1, dm2), refined};
  return {ladder_k2(bq, bm1, bm2), best};
}

}  // namespace

OptimizedBound optimize_parisi(const ModelParams& params, int levels,
                               const QuadratureSpec& quad) {
  validate(params, false);
  quad.validate();
  if (levels == 1) return optimize_k1(params, quad);
  if (levels == 2) return optimize_k2(params, quad);
  throw std::invalid_argument("optimize_parisi: levels must be 1 or 2");
}

}  // namespace hsm
