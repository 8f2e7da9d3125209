// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <limits>

namespace itnkit {

/// Weight in the tropical semiring: plus is min, times is arithmetic
/// addition, zero is +infinity and one is 0.0. Shortest path under this
/// semiring is the minimum-sum path.
class TropicalWeight {
 public:
  constexpr TropicalWeight() = default;  // one()
  constexpr explicit TropicalWeight(double value) : value_(value) {}

  static constexpr TropicalWeight zero() {
    return TropicalWeight(std::numeric_limits<double>::infinity());
  }
  static constexpr TropicalWeight one() { return TropicalWeight(0.0); }

  constexpr double value() const { return value_; }
  constexpr bool is_zero() const {
    return value_ == std::numeric_limits<double>::infinity();
  }

  // Comparisons are exact by design: grammar weights are sums of a few
  // hand-chosen constants, never the result of lossy arithmetic.
  constexpr bool operator==(const TropicalWeight&) const = default;

 private:
  double value_ = 0.0;
};

constexpr TropicalWeight plus(TropicalWeight a, TropicalWeight b) {
  return a.value() <= b.value() ? a : b;
}

constexpr TropicalWeight times(TropicalWeight a, TropicalWeight b) {
  if (a.is_zero() || b.is_zero()) return TropicalWeight::zero();
  return TropicalWeight(a.value() + b.value());
}

}  // namespace itnkit
