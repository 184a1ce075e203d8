#pragma once

#include <utility>
#include <vector>

#include "hsm/params.hpp"

namespace hsm {

// Exact sector log-weights of a block of 2^level spins: log_w[idx] is the
// log of the summed Boltzmann weight of all block configurations with total
// magnetization M = 2*idx - 2^level, counting the interaction terms of every
// level <= level. The external field is applied once, at the top, by
// dhm_free_energy. Sector count is 2^level + 1; at zero weight the entries
// reduce to log binomial degeneracies.
struct MagnetizationLogWeights {
  int level = 0;
  std::vector<double> log_w;

  int num_sectors() const { return static_cast<int>(log_w.size()); }
  int magnetization(int idx) const { return 2 * idx - (1 << level); }
};

// Above this the O(4^depth) sector convolution stops being a desk-scale run.
inline constexpr int kDhmDepthCap = 14;

// Level 0: a single free spin, log_w = {0, 0} for M in {-1, +1}.
MagnetizationLogWeights init_single_spin();

// One recursion step. Combining two level-(L-1) blocks adds the level-L
// coupling, which depends on the block only through its magnetization:
// log W_L(M) = beta*J*2^{-2L sigma} (M^2 - 2^L)/2
//            + logsumexp_{M1+M2=M} [log W_{L-1}(M1) + log W_{L-1}(M2)].
MagnetizationLogWeights level_up(const MagnetizationLogWeights& w,
                                 const ModelParams& params);

// (1/2^depth) log sum_M W_depth(M) e^{h M}, exact up to roundoff. The field
// term h*M carries no beta prefactor. Requires a point field and
// depth <= depth_cap; cost O(4^depth) time, O(2^depth) memory.
double dhm_free_energy(const ModelParams& params, int depth_cap = kDhmDepthCap);

// Sector probabilities proportional to W_depth(M) e^{h M}, normalized.
std::vector<std::pair<int, double>> magnetization_distribution(
    const ModelParams& params, int depth_cap = kDhmDepthCap);

}  // namespace hsm
