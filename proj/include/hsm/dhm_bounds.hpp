#pragma once

#include "hsm/params.hpp"

namespace hsm {

enum class BoundKind { mf, nmf };

std::string to_string(BoundKind kind);

struct BoundResult {
  BoundKind kind;
  double m_star;  // maximizer over [-1, 1]; +m* reported at h = 0
  double value;
  Depth depth;
};

// phi_mf(m) = log 2 + log cosh(beta J C1 m + h) - (beta J/2)(C1 m^2 + C2).
double phi_mf(double m, const ModelParams& params, Depth depth);

// phi_nmf(m) = log 2 + log cosh(beta J (C1-C2) m + h)
//            - (beta J/2)(C1-C2) m^2.
double phi_nmf(double m, const ModelParams& params, Depth depth);

double phi_bound(BoundKind kind, double m, const ModelParams& params,
                 Depth depth);

// Global maximum over m in [-1, 1]: 201-point uniform grid scan to bracket,
// then golden-section refinement to interval width 1e-12. Interior maximizers
// satisfy m = tanh(beta J C m + h) with C the bound's coefficient. At h = 0
// the objective is even in m and unimodal on [0, 1], so the scan restricts
// to m >= 0 and the maximizer of the symmetric pair is reported as +m*.
BoundResult maximize_bound(BoundKind kind, const ModelParams& params,
                           Depth depth);

// Closed forms (2^{2 sigma - 1} - 1)/J and (2^{1-2 sigma} - 3 + 2^{2 sigma})/J
// for 1/2 < sigma <= 1; equal to 1/(J C_kind) at infinite depth.
double beta_critical(BoundKind kind, double sigma, double j_coupling = 1.0);

// Smallest beta with m*(beta) > 1e-6 at h = 0 and infinite depth, located by
// bisection on [0, beta_hi] to tolerance tol_beta.
double detect_transition_beta(BoundKind kind, double sigma,
                              double j_coupling = 1.0, double beta_hi = 4.0,
                              double tol_beta = 1e-4);

}  // namespace hsm
