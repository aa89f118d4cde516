#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unionprob/compensated_sum.hpp"
#include "unionprob/errors.hpp"
#include "unionprob/prob_core.hpp"
#include "unionprob/symmetric_series.hpp"

namespace unionprob {

// Relative errors are fractions throughout; percent is a display concern.

struct ErrorReport {
  double reference = 0.0;
  double truncated = 0.0;
  double relative_error = 0.0;
};

struct MinTermsResult {
  double required_error = 0.0;
  double achieved_error = 0.0;
  std::size_t num_terms = 0;
};

struct ComparisonRow {
  std::vector<double> probs;
  double mean = 0.0;
  double exact_union = 0.0;
  double approx_union = 0.0;
  std::optional<std::size_t> terms;
  std::optional<double> exact_error;
  std::optional<double> approx_error;
};

/// Which series an error profile tracks: the true probabilities, or n copies
/// of their mean.
enum class ErrorMode { kExact, kApprox };

struct ErrorProfile {
  ErrorMode mode = ErrorMode::kExact;
  std::vector<std::pair<std::size_t, double>> entries;  // (m, relative error)
};

/// |reference - truncated| / reference.
inline double relative_error(double reference, double truncated) {
  if (!(reference > 0.0)) {
    throw InvalidInput("relative error needs a positive reference value (all-zero event set?)");
  }
  return std::abs(reference - truncated) / reference;
}

inline ErrorReport make_error_report(double reference, double truncated) {
  return {reference, truncated, relative_error(reference, truncated)};
}

inline ErrorReport exact_error_report(const EventProbabilities& events, std::size_t m) {
  const double truncated = truncated_union_general(events, m).value;
  return make_error_report(exact_union(events), truncated);
}

inline ErrorReport approx_error_report(double mean, std::size_t n, std::size_t m) {
  const double truncated = truncated_union_equal(mean, n, m).value;
  return make_error_report(exact_union_equal(mean, n), truncated);
}

/// Truncation error of the true-probability series after m terms.
inline double exact_error_at(const EventProbabilities& events, std::size_t m) {
  return exact_error_report(events, m).relative_error;
}

/// Truncation error of the mean-probability series 1 - (1 - mean)^n after m terms.
inline double approx_error_at(double mean, std::size_t n, std::size_t m) {
  return approx_error_report(mean, n, m).relative_error;
}

inline double approx_error_at(const EventProbabilities& events, std::size_t m) {
  return approx_error_at(mean_probability(events), events.size(), m);
}

/*!
  Relative error for every truncation order 1..m_max; one figure's worth of
  data. Each series is accumulated once, so the whole profile costs the same
  as its last entry.
*/
inline ErrorProfile error_profile(const EventProbabilities& events, ErrorMode mode,
                                  std::size_t m_max) {
  ErrorProfile profile;
  profile.mode = mode;
  profile.entries.reserve(m_max);
  const std::size_t n = events.size();
  SeriesExpansion series;
  double reference = 0.0;
  if (mode == ErrorMode::kExact) {
    series = expand_series(events, m_max);
    reference = exact_union(events);
  } else {
    const double mean = mean_probability(events);
    series = expand_series(mean, n, m_max);
    reference = exact_union_equal(mean, n);
  }
  for (std::size_t m = 1; m <= m_max; ++m) {
    profile.entries.emplace_back(m, relative_error(reference, series.partial_sums[m - 1]));
  }
  return profile;
}

/*!
  Smallest number of equal-probability series terms whose relative error is
  at most `required`.

  Scans m = 1, 2, ... adding one term per step to a running sum. The scan
  stops at m = n at the latest; there the series is complete and only
  rounding noise remains, so for thresholds below that noise the returned
  achieved_error can exceed `required`.
*/
inline MinTermsResult min_terms_for_error(double p, std::size_t n, double required) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidInput("minimum-terms search needs 0 < p < 1, got " + std::to_string(p));
  }
  detail::require_positive_count(n);
  if (!(required > 0.0)) {
    throw InvalidInput("required error must be positive, got " + std::to_string(required));
  }
  const double reference = exact_union_equal(p, n);
  const long double log_p = std::log(static_cast<long double>(p));
  CompensatedSum<long double> partial;
  MinTermsResult result{required, 0.0, 0};
  for (std::size_t i = 1; i <= n; ++i) {
    const long double term = detail::equal_term_magnitude(log_p, n, i);
    partial += i % 2 == 1 ? term : -term;
    result.num_terms = i;
    result.achieved_error = relative_error(reference, static_cast<double>(partial.value()));
    if (result.achieved_error <= required) break;
  }
  return result;
}

/// As min_terms_for_error, over the true probabilities' series.
inline MinTermsResult min_terms_for_error_general(const EventProbabilities& events,
                                                  double required) {
  if (!(required > 0.0)) {
    throw InvalidInput("required error must be positive, got " + std::to_string(required));
  }
  const double reference = exact_union(events);
  const auto e = elementary_symmetric_prefix(events, events.size());
  CompensatedSum<double> partial;
  MinTermsResult result{required, 0.0, 0};
  for (std::size_t i = 1; i <= e.size(); ++i) {
    partial += detail::alternating_sign(i) * e[i - 1];
    result.num_terms = i;
    result.achieved_error = relative_error(reference, partial.value());
    if (result.achieved_error <= required) break;
  }
  return result;
}

/// One row of the exact-vs-mean comparison; errors filled in when `terms` is given.
inline ComparisonRow compare_row(const EventProbabilities& events,
                                 std::optional<std::size_t> terms = std::nullopt) {
  ComparisonRow row;
  row.probs.assign(events.begin(), events.end());
  row.mean = mean_probability(events);
  row.exact_union = exact_union(events);
  row.approx_union = exact_union_equal(row.mean, events.size());
  if (terms) {
    row.terms = terms;
    row.exact_error = exact_error_at(events, *terms);
    row.approx_error = approx_error_at(row.mean, events.size(), *terms);
  }
  return row;
}

/// Mean-series relative error at each requested truncation order.
inline std::vector<std::pair<std::size_t, double>> max_error_table(
    double mean, std::size_t n, std::span<const std::size_t> m_values) {
  std::vector<std::pair<std::size_t, double>> rows;
  rows.reserve(m_values.size());
  for (std::size_t m : m_values) rows.emplace_back(m, approx_error_at(mean, n, m));
  return rows;
}

}  // namespace unionprob
