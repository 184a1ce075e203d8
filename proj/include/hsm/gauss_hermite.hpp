#pragma once

#include <vector>

namespace hsm {

// Quadrature rule for expectations against a standard Gaussian:
// E[f(Z)] ~= sum_i weights[i] * f(nodes[i]), weights sum to 1.
struct GaussHermiteRule {
  std::vector<double> nodes;        // ascending
  std::vector<double> weights;
  std::vector<double> log_weights;
};

// Golub-Welsch rule of order n, cached per n.
const GaussHermiteRule& gauss_hermite_rule(int n);

}  // namespace hsm
