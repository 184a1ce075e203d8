#include "hsm/params.hpp"

#include <cmath>
#include <stdexcept>

namespace hsm {

Depth Depth::finite(int levels) {
  if (levels < 1) throw std::invalid_argument("Depth: depth must be at least 1");
  return Depth(levels);
}

int Depth::levels() const {
  if (is_infinite()) throw std::logic_error("Depth: infinite depth has no level count");
  return levels_;
}

std::string Depth::to_string() const {
  return is_infinite() ? "inf" : std::to_string(levels_);
}

void validate(const ModelParams& params, bool needs_limit) {
  if (!(params.sigma > 0.0))
    throw std::invalid_argument("ModelParams: sigma must be positive");
  if (!(params.beta >= 0.0))
    throw std::invalid_argument("ModelParams: beta must be non-negative");
  if (!(params.j_coupling >= 0.0))
    throw std::invalid_argument("ModelParams: j_coupling must be non-negative");
  if (params.depth < 1)
    throw std::invalid_argument("ModelParams: depth must be at least 1");
  if (params.field.kind == FieldKind::gaussian && !(params.field.std >= 0.0))
    throw std::invalid_argument("ModelParams: field std must be non-negative");
  if (needs_limit && !(params.sigma > 0.5))
    throw std::invalid_argument(
        "ModelParams: sigma must exceed 1/2 for thermodynamic-limit operations");
}

double coupling_sum_c1(double sigma, Depth depth) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("coupling_sum_c1: sigma must be positive");
  if (depth.is_infinite()) {
    if (!(sigma > 0.5))
      throw std::domain_error(
          "coupling_sum_c1: series diverges at infinite depth for sigma <= 1/2");
    return 1.0 / (std::exp2(2.0 * sigma - 1.0) - 1.0);
  }
  double sum = 0.0;
  for (int l = 1; l <= depth.levels(); ++l) sum += std::exp2(l * (1.0 - 2.0 * sigma));
  return sum;
}

double coupling_sum_c2(double sigma, Depth depth) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("coupling_sum_c2: sigma must be positive");
  if (depth.is_infinite()) return 1.0 / (std::exp2(2.0 * sigma) - 1.0);
  double sum = 0.0;
  for (int l = 1; l <= depth.levels(); ++l) sum += std::exp2(-2.0 * l * sigma);
  return sum;
}

double coupling_sum_c2_range(double sigma, int from_level, int depth) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("coupling_sum_c2_range: sigma must be positive");
  if (from_level < 1)
    throw std::invalid_argument("coupling_sum_c2_range: from_level must be at least 1");
  double sum = 0.0;
  for (int l = from_level; l <= depth; ++l) sum += std::exp2(-2.0 * l * sigma);
  return sum;
}

}  // namespace hsm
