#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unionprob/compensated_sum.hpp"
#include "unionprob/errors.hpp"

namespace unionprob {

namespace detail {

inline bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

inline void require_probability(double p, const char* name) {
  if (!is_probability(p)) {
    throw InvalidInput(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

inline void require_positive_count(std::size_t n) {
  if (n == 0) throw InvalidInput("event count n must be at least 1");
}

}  // namespace detail

/// A value known to lie in [0, 1].
class Probability {
 public:
  explicit Probability(double value) : value_(value) {
    detail::require_probability(value, "probability");
  }

  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

/*!
  Probabilities of n independent events. Events carry no identity beyond
  their probability; construction validates 1 <= n and every p_i in [0, 1].
*/
class EventProbabilities {
 public:
  explicit EventProbabilities(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InvalidInput("event probability list is empty");
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!detail::is_probability(probs_[i])) {
        throw InvalidInput("probability at index " + std::to_string(i) +
                               " must lie in [0, 1], got " + std::to_string(probs_[i]),
                           i);
      }
    }
  }

  EventProbabilities(std::initializer_list<double> probs)
      : EventProbabilities(std::vector<double>(probs)) {}

  /// n copies of p.
  static EventProbabilities uniform(double p, std::size_t n) {
    detail::require_positive_count(n);
    return EventProbabilities(std::vector<double>(n, p));
  }

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> values() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  auto begin() const noexcept { return probs_.begin(); }
  auto end() const noexcept { return probs_.end(); }

 private:
  std::vector<double> probs_;
};

/*!
  P(A_1 u ... u A_n) = 1 - prod(1 - p_i) for independent events.

  Evaluated as -expm1(sum log1p(-p_i)) so that many tiny probabilities, or a
  very long list, keep full relative accuracy. Any p_i == 1 yields exactly 1.
*/
inline Probability exact_union(const EventProbabilities& events) {
  CompensatedSum<double> log_complement;
  for (double p : events) {
    if (p == 1.0) return Probability(1.0);
    log_complement += std::log1p(-p);
  }
  return Probability(-std::expm1(log_complement.value()));
}

/// 1 - (1 - p)^n, with the exponent formed as n * log1p(-p).
inline Probability exact_union_equal(double p, std::size_t n) {
  detail::require_probability(p, "p");
  detail::require_positive_count(n);
  if (p == 1.0) return Probability(1.0);
  return Probability(-std::expm1(static_cast<double>(n) * std::log1p(-p)));
}

/// Arithmetic mean of the p_i at full precision. Never rounded.
inline double mean_probability(const EventProbabilities& events) {
  return compensated_total(events.values()) / static_cast<double>(events.size());
}

}  // namespace unionprob
