#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>

namespace hsm {

// log cosh(x) = |x| + log1p(e^{-2|x|}) - log 2; finite for any x.
inline double log_cosh(double x) {
  const double a = std::fabs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// log(sum_k exp(x_k)) with the maximum factored out. Summation runs in the
// order given, so callers control reproducibility.
double log_sum_exp(std::span<const double> xs);

// Streaming log-sum-exp with a running maximum, for accumulations too long
// to store. Insertion order is the summation order.
class StreamingLogSumExp {
 public:
  void add(double x);
  double value() const;
  long long count() const { return count_; }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;  // sum of exp(x_k - max_)
  long long count_ = 0;
};

// 17-significant-digit decimal form (%.17g); round-trips any double.
std::string format_sig17(double x);

}  // namespace hsm
