#pragma once

#include <string>

namespace hsm {

// Number of hierarchical levels, or the infinite-depth limit. depth = 1 is
// a block of two spins; a finite system has N = 2^depth spins.
class Depth {
 public:
  static Depth finite(int levels);
  static Depth infinite() { return Depth(kInfinite); }

  bool is_infinite() const { return levels_ == kInfinite; }
  int levels() const;  // throws if infinite
  std::string to_string() const;

 private:
  explicit Depth(int levels) : levels_(levels) {}
  static constexpr int kInfinite = -1;
  int levels_;
};

enum class FieldKind { point, gaussian };

// External field h. For kind = point the field is deterministic and equal
// to mean (std ignored). The field always enters the partition sum as
// h * S_i with no beta prefactor.
struct FieldSpec {
  FieldKind kind = FieldKind::point;
  double mean = 0.0;
  double std = 0.0;

  double effective_std() const { return kind == FieldKind::point ? 0.0 : std; }
};

struct ModelParams {
  double sigma = 0.9;       // interaction-decay exponent
  double j_coupling = 1.0;  // ferromagnetic coupling J; fixed to 1 for the glass
  double beta = 1.0;        // inverse temperature
  FieldSpec field{};
  int depth = 1;            // hierarchical levels; N = 2^depth spins
};

// Throws std::invalid_argument naming the violated constraint. needs_limit
// adds the sigma > 1/2 requirement of infinite-depth operations.
void validate(const ModelParams& params, bool needs_limit);

// C1 = sum_{l=1}^{depth} 2^{l(1-2 sigma)}; closed form 1/(2^{2 sigma-1}-1)
// at infinite depth (requires sigma > 1/2 there, else the series diverges).
double coupling_sum_c1(double sigma, Depth depth);

// C2 = sum_{l=1}^{depth} 2^{-2 l sigma}; closed form 1/(2^{2 sigma}-1) at
// infinite depth (converges for any sigma > 0).
double coupling_sum_c2(double sigma, Depth depth);

// sum_{l=from_level}^{depth} 2^{-2 l sigma}: the weight accumulated by a
// spin pair whose lowest common block sits at from_level. Zero when
// from_level > depth.
double coupling_sum_c2_range(double sigma, int from_level, int depth);

}  // namespace hsm
