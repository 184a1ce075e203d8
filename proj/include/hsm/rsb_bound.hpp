#pragma once

#include <vector>

#include "hsm/params.hpp"

namespace hsm {

// RSB parameter ladder: 0 = q_0 <= q_1 <= ... <= q_K = 1 and
// 0 = m_0 < m_1 <= ... <= m_K <= m_{K+1} = 1.
struct ParisiParams {
  std::vector<double> q;  // size K+1
  std::vector<double> m;  // size K+2

  int levels() const { return static_cast<int>(q.size()) - 1; }
  void validate() const;  // throws on a violated ordering/endpoint constraint
};

struct QuadratureSpec {
  int nodes = 64;
  int validation_nodes = 96;

  void validate() const;  // nodes >= 16, validation_nodes > nodes
};

// E[log Z_0] of the nested recursion
//   Z_K = cosh(h + beta sqrt(C1) sum_a sqrt(q_a - q_{a-1}) z_a),
//   Z_a = (E_{a+1}[Z_{a+1}^{m_{a+1}}])^{1/m_{a+1}},
// with C1 at the model's (finite) depth and independent standard Gaussians
// z_a realized by Gauss-Hermite nodes. Powers and averages run in log space.
// The value is recomputed at validation_nodes; a disagreement above 1e-7
// throws (insufficient nodes for this beta).
double parisi_log_z0(const ModelParams& params, const ParisiParams& pp,
                     const QuadratureSpec& quad);

// log 2 + E[log Z_0]
//   + (beta^2/4) C1 [sum_{a=1}^{K} (m_{a+1}-m_a) q_a^2 - 1].
double rsb_bound(const ModelParams& params, const ParisiParams& pp,
                 const QuadratureSpec& quad);

struct OptimizedBound {
  ParisiParams ladder;
  double value;
};

// Minimizes rsb_bound over the free ladder parameters (m_1 for K=1;
// q_1, m_1, m_2 for K=2): coarse feasible grid with 21 points per free
// parameter, then cyclic coordinate descent to parameter tolerance 1e-4.
// A local optimum is acceptable; K=2 is additionally warm-started from the
// embedded K=1 optimum so it never reports a worse value.
OptimizedBound optimize_parisi(const ModelParams& params, int levels,
                               const QuadratureSpec& quad);

}  // namespace hsm
