#pragma once

#include <cmath>

namespace rieszlab {

/// Neumaier compensated accumulator. Pair sums are accumulated per fixed-size
/// block and the block results combined in index order, which keeps totals
/// independent of the worker count.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace rieszlab
