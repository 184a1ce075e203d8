#include "hsm/dhm_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hsm/numeric.hpp"

namespace hsm {

MagnetizationLogWeights init_single_spin() {
  MagnetizationLogWeights w;
  w.level = 0;
  w.log_w = {0.0, 0.0};
  return w;
}

MagnetizationLogWeights level_up(const MagnetizationLogWeights& w,
                                 const ModelParams& params) {
  validate(params, false);
  const int new_level = w.level + 1;
  if (new_level > params.depth)
    throw std::invalid_argument("level_up: next level exceeds params.depth");

  const int half = 1 << w.level;  // input sectors span M1 in [-half, half]
  const int out_sectors = 2 * half + 1;
  // level-L interaction: sum_{i<j} S_i S_j = (M^2 - N)/2 with N = 2^L spins
  const double gain =
      0.5 * params.beta * params.j_coupling * std::exp2(-2.0 * new_level * params.sigma);
  const double block_size = 2.0 * half;

  MagnetizationLogWeights out;
  out.level = new_level;
  out.log_w.resize(out_sectors);
  const auto& in = w.log_w;
  for (int o = 0; o < out_sectors; ++o) {
    const int lo = std::max(0, o - half);
    const int hi = std::min(half, o);
    double mx = -std::numeric_limits<double>::infinity();
    for (int i = lo; i <= hi; ++i) mx = std::max(mx, in[i] + in[o - i]);
    double sum = 0.0;
    for (int i = lo; i <= hi; ++i) sum += std::exp(in[i] + in[o - i] - mx);
    const double mag = static_cast<double>(2 * o) - block_size;
    out.log_w[o] = gain * (mag * mag - block_size) + mx + std::log(sum);
  }
  return out;
}

namespace {

MagnetizationLogWeights top_level_weights(const ModelParams& params, int depth_cap) {
  validate(params, false);
  if (params.field.kind != FieldKind::point)
    throw std::invalid_argument("dhm_free_energy: field must be a point mass");
  if (params.depth > depth_cap)
    throw std::invalid_argument("dhm_free_energy: depth " + std::to_string(params.depth) +
                                " exceeds the depth cap " + std::to_string(depth_cap));
  MagnetizationLogWeights w = init_single_spin();
  for (int level = 1; level <= params.depth; ++level) w = level_up(w, params);
  return w;
}

}  // namespace

double dhm_free_energy(const ModelParams& params, int depth_cap) {
  const MagnetizationLogWeights w = top_level_weights(params, depth_cap);
  const double h = params.field.mean;
  double mx = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < w.num_sectors(); ++i)
    mx = std::max(mx, w.log_w[i] + h * w.magnetization(i));
  double sum = 0.0;
  for (int i = 0; i < w.num_sectors(); ++i)
    sum += std::exp(w.log_w[i] + h * w.magnetization(i) - mx);
  return (mx + std::log(sum)) / std::exp2(params.depth);
}

std::vector<std::pair<int, double>> magnetization_distribution(
    const ModelParams& params, int depth_cap) {
  const MagnetizationLogWeights w = top_level_weights(params, depth_cap);
  const double h = params.field.mean;
  std::vector<double> logp(w.num_sectors());
  for (int i = 0; i < w.num_sectors(); ++i)
    logp[i] = w.log_w[i] + h * w.magnetization(i);
  const double norm = log_sum_exp(logp);
  std::vector<std::pair<int, double>> dist(w.num_sectors());
  for (int i = 0; i < w.num_sectors(); ++i)
    dist[i] = {w.magnetization(i), std::exp(logp[i] - norm)};
  return dist;
}

}  // namespace hsm
