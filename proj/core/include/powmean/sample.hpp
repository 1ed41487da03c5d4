#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powmean/errors.hpp"

namespace powmean {

/// An ordered, finite list of real observations. Validated on construction:
/// nonempty, all values finite.
class Sample {
 public:
  explicit Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
      throw validation_error("Sample: must contain at least one value");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i])) {
        throw validation_error("Sample: non-finite value at index " +
                               std::to_string(i));
      }
    }
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  std::span<const double> span() const { return values_; }

 private:
  std::vector<double> values_;
};

}  // namespace powmean
