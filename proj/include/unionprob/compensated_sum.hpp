#pragma once

#include <cmath>
#include <iterator>
#include <type_traits>

namespace unionprob {

/*!
  Running sum with Neumaier's error-free compensation.

  Unlike plain Kahan summation the compensation stays correct when an
  incoming term is larger in magnitude than the running sum, which is the
  normal situation for alternating inclusion-exclusion series (terms in the
  thousands summing to a value below one).
*/
template <typename T = double>
class CompensatedSum {
  static_assert(std::is_floating_point_v<T>);

 public:
  CompensatedSum() = default;
  explicit CompensatedSum(T initial) : sum_(initial) {}

  CompensatedSum& operator+=(T value) {
    const T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(T value) { return *this += -value; }

  T value() const { return sum_ + compensation_; }

 private:
  T sum_ = T{0};
  T compensation_ = T{0};
};

template <typename Range>
auto compensated_total(const Range& values) {
  using T = std::remove_cvref_t<decltype(*std::begin(values))>;
  CompensatedSum<T> acc;
  for (const auto& v : values) acc += v;
  return acc.value();
}

}  // namespace unionprob
