#include "hsm/hea_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "hsm/numeric.hpp"
#include "hsm/rng.hpp"

namespace hsm {

std::size_t HEAInstance::pair_index(int i, int j) const {
  const std::size_t n = static_cast<std::size_t>(num_sites);
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

double HEAInstance::coupling(int i, int j) const {
  return couplings[pair_index(i, j)];
}

int ancestor_level(int i, int j, int depth) {
  if (i < 0 || j <= i || j >= (1 << depth))
    throw std::invalid_argument("ancestor_level: need 0 <= i < j < 2^depth");
  return std::bit_width(static_cast<unsigned>(i ^ j));
}

double pair_coupling_variance(double sigma, int depth, int i, int j) {
  return coupling_sum_c2_range(sigma, ancestor_level(i, j, depth), depth);
}

HEAInstance sample_instance(const ModelParams& params, std::uint64_t seed) {
  validate(params, false);
  const int n = 1 << params.depth;
  HEAInstance inst;
  inst.depth = params.depth;
  inst.num_sites = n;
  inst.seed = seed;
  inst.couplings.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  inst.fields.resize(n);

  CounterRng rng(seed);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double sd = std::sqrt(pair_coupling_variance(params.sigma, params.depth, i, j));
      inst.couplings[idx++] = sd * rng.next_gaussian();
    }
  }
  if (params.field.kind == FieldKind::point) {
    std::fill(inst.fields.begin(), inst.fields.end(), params.field.mean);
  } else {
    for (int i = 0; i < n; ++i)
      inst.fields[i] = params.field.mean + params.field.std * rng.next_gaussian();
  }
  return inst;
}

double instance_free_energy(const HEAInstance& inst, double beta, int max_spins) {
  const int n = inst.num_sites;
  const int cap = std::min(max_spins, kEnumHardCap);
  if (n > cap)
    throw std::invalid_argument("instance_free_energy: " + std::to_string(n) +
                                " spins exceeds the enumeration cap " + std::to_string(cap));

  // dense symmetric coupling matrix for O(N) local-field updates
  std::vector<double> kmat(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double k = inst.coupling(i, j);
      kmat[static_cast<std::size_t>(i) * n + j] = k;
      kmat[static_cast<std::size_t>(j) * n + i] = k;
    }
  }

  std::vector<double> spin(n, -1.0);
  std::vector<double> local(n, 0.0);  // local[p] = sum_{j != p} K_pj spin_j
  for (int p = 0; p < n; ++p) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += kmat[static_cast<std::size_t>(p) * n + j] * spin[j];
    local[p] = acc;
  }
  double energy = 0.0;  // sum_{i<j} K_ij spin_i spin_j
  for (int p = 0; p < n; ++p) energy += 0.5 * spin[p] * local[p];
  double field_term = 0.0;
  for (int p = 0; p < n; ++p) field_term += inst.fields[p] * spin[p];

  // Gray-code walk: step c flips bit countr_zero(c), changing one spin
  StreamingLogSumExp lse;
  lse.add(beta * energy + field_term);
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t c = 1; c < total; ++c) {
    const int p = std::countr_zero(c);
    const double old_spin = spin[p];
    energy -= 2.0 * old_spin * local[p];
    spin[p] = -old_spin;
    field_term += 2.0 * spin[p] * inst.fields[p];
    const double delta = 2.0 * spin[p];
    const double* row = &kmat[static_cast<std::size_t>(p) * n];
    for (int j = 0; j < n; ++j) local[j] += delta * row[j];  // row[p] = 0
    lse.add(beta * energy + field_term);
  }
  return lse.value() / n;
}

std::vector<double> quenched_samples(const ModelParams& params, int n_samples,
                                     std::uint64_t seed, int workers) {
  validate(params, false);
  if (n_samples < 1)
    throw std::invalid_argument("quenched_samples: n_samples must be at least 1");
  if ((1 << params.depth) > std::min(kEnumDefaultCap, kEnumHardCap))
    throw std::invalid_argument("quenched_samples: depth exceeds the enumeration cap");

  std::vector<double> values(n_samples);
  const auto run = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const HEAInstance inst =
          sample_instance(params, hash_combine(seed, static_cast<std::uint64_t>(i)));
      values[i] = instance_free_energy(inst, params.beta);
    }
  };
  if (workers <= 1) {
    run(0, n_samples);
    return values;
  }
  const int nw = std::min(workers, n_samples);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    const int begin = static_cast<int>(static_cast<long long>(n_samples) * w / nw);
    const int end = static_cast<int>(static_cast<long long>(n_samples) * (w + 1) / nw);
    pool.emplace_back(run, begin, end);
  }
  for (auto& t : pool) t.join();
  return values;
}

QuenchedEstimate estimate_from_samples(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 2)
    throw std::invalid_argument("estimate_from_samples: need at least 2 samples");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1));
  return QuenchedEstimate{mean, sd / std::sqrt(static_cast<double>(n)), n};
}

double sample_sd(std::span<const double> values) {
  const QuenchedEstimate est = estimate_from_samples(values);
  return est.std_error * std::sqrt(static_cast<double>(est.n_samples));
}

QuenchedEstimate quenched_free_energy(const ModelParams& params, int n_samples,
                                      std::uint64_t seed, int workers) {
  if (n_samples < 2)
    throw std::invalid_argument("quenched_free_energy: n_samples must be at least 2");
  return estimate_from_samples(quenched_samples(params, n_samples, seed, workers));
}

void export_instance(const HEAInstance& inst, double sigma, std::ostream& out) {
  out << inst.depth << ' ' << format_sig17(sigma) << ' ' << inst.seed << '\n';
  for (int i = 0; i < inst.num_sites; ++i)
    for (int j = i + 1; j < inst.num_sites; ++j)
      out << (i + 1) << ' ' << (j + 1) << ' ' << format_sig17(inst.coupling(i, j)) << '\n';
  for (int i = 0; i < inst.num_sites; ++i)
    out << (i + 1) << ' ' << format_sig17(inst.fields[i]) << '\n';
}

ImportedInstance import_instance(std::istream& in) {
  ImportedInstance result;
  HEAInstance& inst = result.instance;
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("import_instance: missing header line");
  {
    std::istringstream hs(header);
    if (!(hs >> inst.depth >> result.sigma >> inst.seed))
      throw std::runtime_error("import_instance: malformed header, expected 'depth sigma seed'");
  }
  if (inst.depth < 1 || inst.depth > 30)
    throw std::runtime_error("import_instance: depth out of range");
  const int n = 1 << inst.depth;
  inst.num_sites = n;
  inst.couplings.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  inst.fields.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int a = 0, b = 0;
      double k = 0.0;
      if (!(in >> a >> b >> k) || a != i + 1 || b != j + 1)
        throw std::runtime_error("import_instance: malformed pair line for (" +
                                 std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      inst.couplings[inst.pair_index(i, j)] = k;
    }
  }
  for (int i = 0; i < n; ++i) {
    int a = 0;
    double h = 0.0;
    if (!(in >> a >> h) || a != i + 1)
      throw std::runtime_error("import_instance: malformed field line for site " +
                               std::to_string(i + 1));
    inst.fields[i] = h;
  }
  return result;
}

}  // namespace hsm
