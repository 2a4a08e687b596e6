#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mahc {

/// Generates the Zipf popularity vector p_n = n^-alpha / sum_j j^-alpha,
/// normalized and nonincreasing. alpha = 0 yields the uniform distribution.
std::vector<double> zipf_popularity(int content_count, double alpha);

/// The content library: N equally-sized contents with a fixed popularity
/// distribution. Contents are indexed 1..N in nonincreasing popularity order
/// (the canonical ordering used by every other module).
class ContentLibrary {
 public:
  /// `popularity` must be nonincreasing, entrywise nonnegative, and sum to 1
  /// within 1e-9. Throws std::invalid_argument otherwise.
  explicit ContentLibrary(std::vector<double> popularity,
                          double content_size_bits = 1.0);

  int content_count() const { return static_cast<int>(popularity_.size()); }
  double content_size_bits() const { return content_size_bits_; }

  /// Popularity of a content by canonical 1-based index.
  double popularity(int content) const {
    if (content < 1 || content > content_count())
      throw std::invalid_argument("content index out of range: " +
                                  std::to_string(content));
    return popularity_[static_cast<size_t>(content) - 1];
  }

  const std::vector<double>& popularity_vector() const { return popularity_; }

 private:
  std::vector<double> popularity_;
  double content_size_bits_;
};

}  // namespace mahc
