#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hsm/params.hpp"

namespace hsm {

// One disorder realization with the per-level Gaussian couplings collapsed
// into a single effective K_ij per pair (a sum of independent zero-mean
// Gaussians, so itself Gaussian with the summed variance). Sites are
// 0-based in code; the text export format is 1-based.
struct HEAInstance {
  int depth = 1;
  int num_sites = 2;
  std::vector<double> couplings;  // upper triangle, packed row-major
  std::vector<double> fields;
  std::uint64_t seed = 0;

  std::size_t pair_index(int i, int j) const;  // requires i < j
  double coupling(int i, int j) const;
};

struct QuenchedEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n_samples)
  int n_samples = 0;
};

inline constexpr int kEnumDefaultCap = 20;  // spins; ~1e6 Gray-code steps
inline constexpr int kEnumHardCap = 24;

// Smallest level at which 0-based sites i < j share a block; equals the bit
// width of i XOR j. Siblings are level 1, opposite halves level `depth`.
int ancestor_level(int i, int j, int depth);

// Var K_ij = sum_{l=ancestor_level(i,j)}^{depth} 2^{-2 l sigma}.
double pair_coupling_variance(double sigma, int depth, int i, int j);

// Deterministic function of (params, seed): couplings drawn first in
// row-major pair order, then per-site fields, all from CounterRng(seed).
HEAInstance sample_instance(const ModelParams& params, std::uint64_t seed);

// (1/N) log sum_S exp(beta sum_{i<j} K_ij S_i S_j + sum_i h_i S_i) over all
// 2^N configurations, by Gray-code enumeration with O(N) incremental energy
// updates per flip and streaming log-sum-exp. N must not exceed
// min(max_spins, 24).
double instance_free_energy(const HEAInstance& inst, double beta,
                            int max_spins = kEnumDefaultCap);

// Per-instance free energies for sample indices 0..n_samples-1; instance i
// uses seed hash_combine(seed, i). Workers split the index range; the output
// vector is identical for any worker count.
std::vector<double> quenched_samples(const ModelParams& params, int n_samples,
                                     std::uint64_t seed, int workers = 1);

QuenchedEstimate estimate_from_samples(std::span<const double> values);
double sample_sd(std::span<const double> values);

// Mean and standard error of instance_free_energy over n_samples >= 2
// disorder realizations, reduced in fixed index order.
QuenchedEstimate quenched_free_energy(const ModelParams& params, int n_samples,
                                      std::uint64_t seed, int workers = 1);

// Plain-text tabular exchange format: header "depth sigma seed", then one
// line "i j K_ij" per pair and one line "i h_i" per site (1-based indices,
// 17 significant digits).
void export_instance(const HEAInstance& inst, double sigma, std::ostream& out);

struct ImportedInstance {
  HEAInstance instance;
  double sigma = 0.0;
};

ImportedInstance import_instance(std::istream& in);

}  // namespace hsm
