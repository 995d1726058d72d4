#pragma once

#include <cmath>

namespace lpns {

/// Neumaier compensated accumulator. All reductions in the library go through
/// this in a fixed element order, so results do not depend on thread count.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace lpns
