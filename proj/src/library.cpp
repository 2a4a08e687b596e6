#include "mahc/library.hpp"

#include <cmath>
#include <numeric>

namespace mahc {

std::vector<double> zipf_popularity(int content_count, double alpha) {
  if (content_count < 1) {
    throw std::invalid_argument("content count must be at least 1");
  }
  if (alpha < 0.0) {
    throw std::invalid_argument("zipf exponent must be nonnegative");
  }
  std::vector<double> weights(static_cast<std::size_t>(content_count));
  for (int n = 1; n <= content_count; ++n) {
    weights[static_cast<std::size_t>(n - 1)] =
        std::pow(static_cast<double>(n), -alpha);
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) {
    w /= total;
  }
  return weights;
}

ContentLibrary::ContentLibrary(std::vector<double> popularity,
                               double content_size_bits)
    : popularity_(std::move(popularity)),
      content_size_bits_(content_size_bits) {
  if (popularity_.empty()) {
    throw std::invalid_argument("popularity vector must be nonempty");
  }
  if (!(content_size_bits_ > 0.0)) {
    throw std::invalid_argument("content size must be positive");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < popularity_.size(); ++i) {
    const double p = popularity_[i];
    if (p < 0.0) {
      throw std::invalid_argument("popularity entries must be nonnegative");
    }
    if (i > 0 && p > popularity_[i - 1] + 1e-12) {
      throw std::invalid_argument(
          "popularity must be nonincreasing (canonical content order)");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("popularity must sum to 1, got " +
                                std::to_string(total));
  }
}

}  // namespace mahc
