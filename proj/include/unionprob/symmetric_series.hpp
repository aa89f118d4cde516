#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "unionprob/compensated_sum.hpp"
#include "unionprob/errors.hpp"
#include "unionprob/prob_core.hpp"

namespace unionprob {

namespace detail {

inline void require_order(std::size_t m, std::size_t n) {
  if (m < 1 || m > n) {
    throw InvalidInput("truncation order m must satisfy 1 <= m <= n (m = " + std::to_string(m) +
                       ", n = " + std::to_string(n) + ")");
  }
}

// Stirling remainder: ln x! - [(x + 1/2) ln x - x + ln(2 pi) / 2].
template <typename T>
T stirling_remainder(T x) {
  static constexpr std::array<long double, 16> kSmall = {
      0.0L,  // unused
      0.08106146679532725822L,   0.041340695955409294094L,  0.027677925684998339149L,
      0.020790672103765093112L,  0.016644691189821192163L,  0.013876128823070747999L,
      0.011896709945891770095L,  0.010411265261972096497L,  0.0092554621827127329177L,
      0.0083305634333628712565L, 0.007573675487951840795L,  0.0069428401072095298657L,
      0.0064089941880042070684L, 0.0059513701127588477356L, 0.005554733551962801371L,
  };
  if (x <= T{15}) return static_cast<T>(kSmall[static_cast<std::size_t>(x)]);
  const T inv = T{1} / x;
  const T inv2 = inv * inv;
  // Asymptotic series; at x > 15 the first omitted term is below 1e-18.
  return inv * (T{1} / 12 -
                inv2 * (T{1} / 360 -
                        inv2 * (T{1} / 1260 -
                                inv2 * (T{1} / 1680 - inv2 * (T{1} / 1188 - inv2 * T{691} / 360360)))));
}

template <typename T>
T log_binomial_in(std::uint64_t n, std::uint64_t i) {
  if (i > n) {
    throw InvalidInput("log_binomial requires i <= n (n = " + std::to_string(n) +
                       ", i = " + std::to_string(i) + ")");
  }
  const std::uint64_t k = std::min(i, n - i);
  if (k == 0) return T{0};
  if (n <= 60) {
    std::uint64_t c = 1;
    for (std::uint64_t j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return std::log(static_cast<T>(c));
  }
  const T nn = static_cast<T>(n);
  const T kk = static_cast<T>(k);
  const T rest = static_cast<T>(n - k);
  const T leading = kk * std::log(nn / kk) - rest * std::log1p(-kk / nn);
  const T half_log = std::log(nn / (2 * std::numbers::pi_v<T> * kk * rest)) / 2;
  return leading + half_log + stirling_remainder(nn) - stirling_remainder(kk) -
         stirling_remainder(rest);
}

}  // namespace detail

/*!
  Natural log of the binomial coefficient C(n, i).

  Small n (<= 60) is evaluated from the exact integer coefficient. Larger n
  use the log-gamma decomposition into Stirling's leading terms plus the
  remainder, with the leading terms rearranged as
  k ln(n/k) - (n-k) log1p(-k/n) so nothing of size ln n! is ever cancelled.
*/
inline double log_binomial(std::uint64_t n, std::uint64_t i) {
  return detail::log_binomial_in<double>(n, i);
}

/*!
  e_1 ... e_m, the elementary symmetric polynomials of the probabilities:
  e_i sums the products over every i-element subset.

  Built by the O(n m) recurrence e[k] += p * e[k-1] (k descending), so no
  subset is ever enumerated.
*/
inline std::vector<double> elementary_symmetric_prefix(const EventProbabilities& events,
                                                       std::size_t m) {
  detail::require_order(m, events.size());
  std::vector<double> e(m + 1, 0.0);
  e[0] = 1.0;
  std::size_t seen = 0;
  for (double p : events) {
    ++seen;
    for (std::size_t k = std::min(m, seen); k >= 1; --k) e[k] += p * e[k - 1];
  }
  return {e.begin() + 1, e.end()};
}

/// A truncated series value. Not clamped: small m can leave [0, 1].
struct TruncatedValue {
  double value = 0.0;
  bool out_of_range = false;
};

inline bool outside_unit_interval(double v) { return !(v >= 0.0 && v <= 1.0); }

enum class SeriesMode { kEqual, kGeneral };

struct SeriesTerm {
  std::size_t index = 0;    // 1-based
  double magnitude = 0.0;   // T_i >= 0
  double signed_value = 0.0;  // (-1)^(i-1) T_i
};

/// The leading m signed inclusion-exclusion terms and their running sums.
struct SeriesExpansion {
  SeriesMode mode = SeriesMode::kGeneral;
  std::vector<SeriesTerm> terms;
  std::vector<double> partial_sums;  // partial_sums[k-1] = S_k
};

namespace detail {

inline double alternating_sign(std::size_t i) { return (i % 2 == 1) ? 1.0 : -1.0; }

// T_i = C(n, i) p^i, formed in log space. Requires p > 0. The exponent is
// carried in extended precision: with terms near 1e3 cancelling to a sum
// below one, a double exponent's rounding would dominate the final error.
inline long double equal_term_magnitude(long double log_p, std::size_t n, std::size_t i) {
  return std::exp(log_binomial_in<long double>(n, i) + static_cast<long double>(i) * log_p);
}

inline void require_equal_domain(double p, std::size_t n, std::size_t m) {
  require_probability(p, "p");
  require_positive_count(n);
  require_order(m, n);
}

// Sums the alternating series in the precision of the term type T; terms and
// partial sums are reported rounded to double.
template <typename T, typename TermFn, typename Visit>
double accumulate_alternating(std::size_t m, TermFn&& magnitude, Visit&& visit) {
  CompensatedSum<T> acc;
  for (std::size_t i = 1; i <= m; ++i) {
    const T t = magnitude(i);
    const T signed_value = i % 2 == 1 ? t : -t;
    acc += signed_value;
    visit(SeriesTerm{i, static_cast<double>(t), static_cast<double>(signed_value)},
          static_cast<double>(acc.value()));
  }
  return static_cast<double>(acc.value());
}

inline double equal_series(double p, std::size_t n, std::size_t m, auto&& visit) {
  if (p == 0.0) {
    return accumulate_alternating<double>(m, [](std::size_t) { return 0.0; }, visit);
  }
  const long double log_p = std::log(static_cast<long double>(p));
  return accumulate_alternating<long double>(
      m, [&](std::size_t i) { return equal_term_magnitude(log_p, n, i); }, visit);
}

inline double general_series(const EventProbabilities& events, std::size_t m, auto&& visit) {
  const auto e = elementary_symmetric_prefix(events, m);
  return accumulate_alternating<double>(m, [&](std::size_t i) { return e[i - 1]; }, visit);
}

}  // namespace detail

/// Sum_{i<=m} (-1)^(i-1) C(n,i) p^i: the equal-probability series cut at m terms.
inline TruncatedValue truncated_union_equal(double p, std::size_t n, std::size_t m) {
  detail::require_equal_domain(p, n, m);
  const double v = detail::equal_series(p, n, m, [](const SeriesTerm&, double) {});
  return {v, outside_unit_interval(v)};
}

/// Sum_{i<=m} (-1)^(i-1) e_i for arbitrary probabilities.
inline TruncatedValue truncated_union_general(const EventProbabilities& events, std::size_t m) {
  const double v = detail::general_series(events, m, [](const SeriesTerm&, double) {});
  return {v, outside_unit_interval(v)};
}

inline SeriesExpansion expand_series(const EventProbabilities& events, std::size_t m) {
  SeriesExpansion out;
  out.mode = SeriesMode::kGeneral;
  detail::require_order(m, events.size());
  out.terms.reserve(m);
  out.partial_sums.reserve(m);
  detail::general_series(events, m, [&](const SeriesTerm& t, double partial) {
    out.terms.push_back(t);
    out.partial_sums.push_back(partial);
  });
  return out;
}

inline SeriesExpansion expand_series(double p, std::size_t n, std::size_t m) {
  detail::require_equal_domain(p, n, m);
  SeriesExpansion out;
  out.mode = SeriesMode::kEqual;
  out.terms.reserve(m);
  out.partial_sums.reserve(m);
  detail::equal_series(p, n, m, [&](const SeriesTerm& t, double partial) {
    out.terms.push_back(t);
    out.partial_sums.push_back(partial);
  });
  return out;
}

}  // namespace unionprob
