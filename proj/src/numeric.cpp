#include "hsm/numeric.hpp"

#include <cstdio>

namespace hsm {

double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return -std::numeric_limits<double>::infinity();
  double mx = xs[0];
  for (double x : xs) mx = std::max(mx, x);
  if (!std::isfinite(mx)) return mx;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - mx);
  return mx + std::log(sum);
}

void StreamingLogSumExp::add(double x) {
  ++count_;
  if (std::isinf(x) && x < 0.0) return;  // exp(-inf) contributes nothing
  if (x <= max_) {
    sum_ += std::exp(x - max_);
    return;
  }
  // new running maximum; rescale the partial sum
  sum_ = sum_ * std::exp(max_ - x) + 1.0;
  max_ = x;
}

double StreamingLogSumExp::value() const {
  if (count_ == 0) return -std::numeric_limits<double>::infinity();
  return max_ + std::log(sum_);
}

std::string format_sig17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace hsm
