#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unionprob/unionprob.hpp"

namespace unionprob::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kDefaultDecimals = 4;

// ---------------------------------------------------------------------------
// Record output

struct Number {
  double value;
  int decimals;
};
// A fraction shown as percent: the digits of the fraction at decimals + 2
// places with the point moved right by two, so both renderings agree exactly.
struct Percent {
  double fraction;
  int decimals;
};
using Cell = std::variant<Number, Percent, std::uint64_t, std::string, bool>;

std::string format_percent(double fraction, int decimals) {
  std::string s = format_decimal(fraction, decimals + 2);
  const auto dot = s.find('.');
  if (dot == std::string::npos) return s;
  const bool negative = s.front() == '-';
  std::string digits = s.substr(negative ? 1 : 0);
  const auto d = digits.find('.');
  digits.erase(d, 1);
  digits.insert(d + 2, decimals > 0 ? "." : "");
  const auto first = digits.find_first_not_of('0');
  const auto keep = std::min(first, digits.find('.') == std::string::npos
                                        ? digits.size() - 1
                                        : digits.find('.') - 1);
  digits.erase(0, keep);
  return (negative ? "-" : "") + digits;
}

struct Record {
  std::vector<std::pair<std::string, Cell>> fields;

  Record& add(std::string name, Cell cell) {
    fields.emplace_back(std::move(name), std::move(cell));
    return *this;
  }
};

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Number>) {
          return format_decimal(v.value, v.decimals);
        } else if constexpr (std::is_same_v<V, Percent>) {
          return format_percent(v.fraction, v.decimals);
        } else if constexpr (std::is_same_v<V, std::uint64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<V, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

ordered_json cell_json(const Cell& cell) {
  if (std::holds_alternative<Number>(cell) || std::holds_alternative<Percent>(cell)) {
    // Round-trip through the formatted text so JSON and CSV carry one value.
    const std::string text = cell_text(cell);
    double parsed = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec != std::errc{} || !std::isfinite(parsed)) return nullptr;
    return parsed;
  }
  if (const auto* i = std::get_if<std::uint64_t>(&cell)) return *i;
  if (const auto* b = std::get_if<bool>(&cell)) return *b;
  return std::get<std::string>(cell);
}

enum class Format { kJson, kCsv, kText };

void write_csv(std::ostream& out, const std::vector<Record>& rows) {
  if (rows.empty()) return;
  for (std::size_t i = 0; i < rows.front().fields.size(); ++i) {
    out << (i ? "," : "") << rows.front().fields[i].first;
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.fields.size(); ++i) {
      out << (i ? "," : "") << cell_text(row.fields[i].second);
    }
    out << '\n';
  }
}

void write_text(std::ostream& out, const std::vector<Record>& rows) {
  if (rows.empty()) return;
  const std::size_t cols = rows.front().fields.size();
  std::vector<std::size_t> width(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) width[c] = rows.front().fields[c].first.size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols; ++c) {
      width[c] = std::max(width[c], cell_text(row.fields[c].second).size());
    }
  }
  auto emit = [&](auto&& text_of) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string s = text_of(c);
      out << (c ? "  " : "") << s << std::string(width[c] - s.size(), ' ');
    }
    out << '\n';
  };
  emit([&](std::size_t c) { return rows.front().fields[c].first; });
  for (const auto& row : rows) emit([&](std::size_t c) { return cell_text(row.fields[c].second); });
}

ordered_json record_json(const Record& row) {
  ordered_json obj = ordered_json::object();
  for (const auto& [name, cell] : row.fields) obj[name] = cell_json(cell);
  return obj;
}

// Single-record commands print a JSON object, multi-row commands an array.
void emit(std::ostream& out, Format format, const std::vector<Record>& rows, bool single) {
  switch (format) {
    case Format::kCsv:
      write_csv(out, rows);
      break;
    case Format::kText:
      write_text(out, rows);
      break;
    case Format::kJson: {
      if (single && rows.size() == 1) {
        out << record_json(rows.front()).dump(2) << '\n';
      } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(record_json(r));
        out << arr.dump(2) << '\n';
      }
      break;
    }
  }
}

std::string join_probs(std::span<const double> probs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, probs[i]);
    os << (i ? ";" : "") << std::string(buf, res.ptr);
  }
  return os.str();
}

void add_error(Record& r, const std::string& prefix, double fraction, int decimals) {
  r.add(prefix + "rel_error", Number{fraction, decimals + 2});
  r.add(prefix + "rel_error_pct", Percent{fraction, decimals});
}

// ---------------------------------------------------------------------------
// Input selection shared by several subcommands

struct InputOptions {
  std::string probs_file;
  std::optional<double> p;
  std::optional<std::uint64_t> n;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--probs", in.probs_file, "File with one probability per line");
  cmd->add_option("--p", in.p, "Common probability of every event");
  cmd->add_option("--n", in.n, "Number of events sharing probability --p");
}

// Either a probability list or (p, n).
struct Input {
  std::optional<EventProbabilities> events;
  double p = 0.0;
  std::size_t n = 0;
};

Input resolve_input(const InputOptions& in) {
  const bool have_file = !in.probs_file.empty();
  const bool have_pn = in.p.has_value() || in.n.has_value();
  if (have_file == have_pn) {
    throw UsageError("give exactly one of --probs FILE or --p P --n N");
  }
  Input out;
  if (have_file) {
    out.events.emplace(read_probability_file(in.probs_file));
    out.n = out.events->size();
    return out;
  }
  if (!in.p || !in.n) throw UsageError("--p and --n must be given together");
  if (!(*in.p >= 0.0 && *in.p <= 1.0)) {
    throw InvalidInput("--p must lie in [0, 1], got " + format_decimal(*in.p, 6));
  }
  if (*in.n == 0) throw InvalidInput("--n must be at least 1");
  out.p = *in.p;
  out.n = static_cast<std::size_t>(*in.n);
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return Format::kText;
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_union(const Input& in, int d, Format f, std::ostream& out) {
  Record r;
  r.add("n", std::uint64_t{in.n});
  if (in.events) {
    const auto row = compare_row(*in.events);
    r.add("mean", Number{row.mean, d});
    r.add("exact", Number{row.exact_union, d});
    r.add("approx", Number{row.approx_union, d});
  } else {
    r.add("exact", Number{exact_union_equal(in.p, in.n), d});
  }
  emit(out, f, {r}, true);
}

void cmd_series(const Input& in, std::size_t m, int d, Format f, std::ostream& out) {
  const SeriesExpansion s = in.events ? expand_series(*in.events, m) : expand_series(in.p, in.n, m);
  std::vector<Record> rows;
  for (std::size_t k = 0; k < s.terms.size(); ++k) {
    Record r;
    r.add("i", std::uint64_t{s.terms[k].index});
    r.add("term", Number{s.terms[k].signed_value, d});
    r.add("partial_sum", Number{s.partial_sums[k], d});
    r.add("out_of_range", outside_unit_interval(s.partial_sums[k]));
    rows.push_back(std::move(r));
  }
  emit(out, f, rows, false);
}

void cmd_profile(const Input& in, ErrorMode mode, std::size_t m_max, int d, Format f,
                 std::ostream& out) {
  const EventProbabilities events =
      in.events ? *in.events : EventProbabilities::uniform(in.p, in.n);
  const ErrorProfile profile = error_profile(events, mode, m_max);
  std::vector<Record> rows;
  for (const auto& [m, err] : profile.entries) {
    Record r;
    r.add("m", std::uint64_t{m});
    add_error(r, "", err, d);
    rows.push_back(std::move(r));
  }
  emit(out, f, rows, false);
}

void cmd_min_terms(const Input& in, double re, int d, Format f, std::ostream& out) {
  const MinTermsResult res =
      in.events ? min_terms_for_error_general(*in.events, re) : min_terms_for_error(in.p, in.n, re);
  Record r;
  r.add("n", std::uint64_t{in.n});
  r.add("re", Number{re, d + 2});
  r.add("num_terms", std::uint64_t{res.num_terms});
  add_error(r, "", res.achieved_error, d);
  emit(out, f, {r}, true);
}

// Inputs of the three reference tables. Expected outputs live in the tests.
const std::vector<std::vector<double>>& reference_device_sets() {
  static const std::vector<std::vector<double>> sets = {
      {0.1, 0.3},
      {0.1, 0.3, 0.5},
      {0.1, 0.2, 0.2, 0.3},
      {0.5, 0.8, 0.2, 0.4},
      {0.1, 0.2, 0.2, 0.3, 0.2},
  };
  return sets;
}

struct MaxErrorBlock {
  double mean;
  std::vector<std::size_t> terms;
};

const std::vector<MaxErrorBlock>& reference_max_error_blocks() {
  static const std::vector<MaxErrorBlock> blocks = {
      {0.1, {26, 27, 28, 29, 30}},
      {0.01, {1, 2, 3, 4, 5, 6}},
  };
  return blocks;
}

void cmd_table(int which, int d, Format f, std::ostream& out) {
  std::vector<Record> rows;
  if (which == 1 || which == 2) {
    for (const auto& set : reference_device_sets()) {
      const EventProbabilities events(set);
      const std::size_t n = events.size();
      Record r;
      r.add("n", std::uint64_t{n});
      r.add("probs", join_probs(events.values()));
      if (which == 1) {
        const ComparisonRow row = compare_row(events);
        r.add("mean", Number{row.mean, d});
        r.add("exact", Number{row.exact_union, d});
        r.add("approx", Number{row.approx_union, d});
      } else {
        const ComparisonRow row = compare_row(events, n - 1);
        r.add("mean", Number{row.mean, d});
        r.add("m", std::uint64_t{n - 1});
        add_error(r, "exact_", *row.exact_error, d);
        add_error(r, "approx_", *row.approx_error, d);
      }
      rows.push_back(std::move(r));
    }
  } else {
    constexpr std::size_t kDevices = 100;
    for (const auto& block : reference_max_error_blocks()) {
      for (const auto& [m, err] : max_error_table(block.mean, kDevices, block.terms)) {
        Record r;
        r.add("mean", Number{block.mean, d});
        r.add("n", std::uint64_t{kDevices});
        r.add("m", std::uint64_t{m});
        add_error(r, "", err, d);
        rows.push_back(std::move(r));
      }
    }
  }
  emit(out, f, rows, false);
}

// splitmix64 finalizer; decorrelates per-case seeds from the shard seeds.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Relative difference, measured against the larger magnitude.
double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

int cmd_verify(std::size_t n, std::uint64_t cases, std::uint64_t seed, std::uint64_t trials, int d,
               Format f, std::ostream& out, std::ostream& err) {
  constexpr double kAgreement = 1e-10;
  constexpr double kMonteCarloSigmas = 5.0;
  constexpr double kRareEventSlack = 3.0;
  const bool exhaustive = n <= oracle::kMaxExhaustiveEvents;
  if (!exhaustive) {
    err << "note: exhaustive oracle is capped at " << oracle::kMaxExhaustiveEvents
        << " events; running Monte Carlo checks only\n";
  }

  std::mt19937_64 rng(seed);
  double worst_oracle = 0.0;
  double worst_series = 0.0;
  double worst_sigma = 0.0;
  std::uint64_t beyond_4se = 0;
  std::uint64_t failures = 0;

  for (std::uint64_t c = 0; c < cases; ++c) {
    std::vector<double> probs(n);
    for (auto& p : probs) p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const EventProbabilities events(probs);
    const double exact = exact_union(events);
    bool ok = true;

    if (exhaustive) {
      const double brute = oracle::subset_inclusion_exclusion(events);
      const double diff = rel_diff(exact, brute);
      worst_oracle = std::max(worst_oracle, diff);
      ok = ok && diff <= kAgreement;

      // The DP loses about n ulps per e_i; scale the allowance by the series mass.
      const auto e = elementary_symmetric_prefix(events, n);
      const double mass = compensated_total(e);
      const double series = truncated_union_general(events, n).value;
      const double allowance =
          std::max(kAgreement, 4.0 * static_cast<double>(n) * 0x1.0p-52 * mass / exact);
      const double sdiff = rel_diff(exact, series);
      worst_series = std::max(worst_series, sdiff);
      ok = ok && sdiff <= allowance;
    }

    const auto mc = oracle::bernoulli_monte_carlo(events, trials, mix_seed(seed + c));
    const double t = static_cast<double>(trials);
    const double sigma = std::sqrt(exact * (1.0 - exact) / t);
    const double dev = std::abs(mc.estimate - exact);
    if (sigma > 0.0) {
      worst_sigma = std::max(worst_sigma, dev / sigma);
      if (dev > 4.0 * sigma) ++beyond_4se;
    }
    // The 3/trials slack covers the Poisson regime (union within a few
    // 1/trials of 0 or 1) where the normal tail is far too thin.
    ok = ok && dev <= kMonteCarloSigmas * sigma + kRareEventSlack / t;
    if (!ok) ++failures;
  }

  Record r;
  r.add("n", std::uint64_t{n});
  r.add("cases", cases);
  r.add("seed", seed);
  r.add("trials", trials);
  r.add("exhaustive", exhaustive);
  r.add("max_rel_diff_oracle", Number{worst_oracle, 17});
  r.add("max_rel_diff_series", Number{worst_series, 17});
  r.add("max_mc_sigmas", Number{worst_sigma, d});
  r.add("mc_beyond_4se", beyond_4se);
  r.add("failures", failures);
  r.add("pass", failures == 0);
  emit(out, f, {r}, true);
  return failures == 0 ? kSuccess : kVerificationFailed;
}

void cmd_bench(std::size_t n, std::size_t m, std::uint64_t reps, std::uint64_t seed, double max_p,
               Format f, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  std::vector<double> probs(n);
  for (auto& p : probs) p = max_p * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  const EventProbabilities events(probs);

  auto seconds_per_rep = [&](auto&& fn) {
    const auto start = Clock::now();
    for (std::uint64_t r = 0; r < reps; ++r) fn();
    return std::chrono::duration<double>(Clock::now() - start).count() / static_cast<double>(reps);
  };

  double dp_value = 0.0;
  const double dp_seconds = seconds_per_rep([&] { dp_value = truncated_union_general(events, m).value; });

  Record r;
  r.add("n", std::uint64_t{n});
  r.add("m", std::uint64_t{m});
  r.add("reps", reps);
  r.add("value", Number{dp_value, 12});
  r.add("dp_seconds", Number{dp_seconds, 9});
  if (n <= oracle::kMaxExhaustiveEvents) {
    double brute = 0.0;
    const double brute_seconds =
        seconds_per_rep([&] { brute = oracle::subset_inclusion_exclusion(events); });
    r.add("exhaustive_value", Number{brute, 12});
    r.add("exhaustive_seconds", Number{brute_seconds, 9});
    if (m == n) r.add("agree", rel_diff(dp_value, brute) <= 1e-10);
  }
  emit(out, f, {r}, true);
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<double> parse_probability_list(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    if (line.front() == '#') continue;

    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value,
                                           std::chars_format::fixed);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw InputError("line " + std::to_string(line_no) + ": not a decimal number: '" +
                           std::string(line) + "'",
                       line_no);
    }
    if (!(value >= 0.0 && value <= 1.0)) {
      throw InputError("line " + std::to_string(line_no) + ": probability " + std::string(line) +
                           " is outside [0, 1]",
                       line_no);
    }
    values.push_back(value);
  }
  if (values.empty()) throw InputError("no probabilities found", 0);
  return values;
}

std::vector<double> read_probability_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  try {
    return parse_probability_list(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what(), e.line());
  }
}

std::string format_decimal(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  std::string s(buf, res.ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Union probability of independent events: exact, truncated series, and the "
               "mean-probability approximation"};
  app.require_subcommand(1);

  int decimals = kDefaultDecimals;
  std::string format = "json";
  auto add_common = [&](CLI::App* cmd, const std::string& default_format) {
    cmd->add_option("--decimals", decimals, "Decimal places in numeric output")
        ->check(CLI::Range(0, 17));
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_str(default_format);
  };

  InputOptions input;
  std::size_t m = 0;
  std::string mode = "exact";
  double re = 0.0;
  int which = 1;
  std::uint64_t vn = 0;
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  std::uint64_t reps = 1;
  double max_p = 0.01;

  auto* union_cmd = app.add_subcommand("union", "Exact union probability (and mean approximation)");
  add_input_options(union_cmd, input);
  add_common(union_cmd, "json");

  auto* series_cmd = app.add_subcommand("series", "Leading inclusion-exclusion terms and partial sums");
  add_input_options(series_cmd, input);
  series_cmd->add_option("--m", m, "Number of terms")->required();
  add_common(series_cmd, "json");

  auto* profile_cmd = app.add_subcommand("profile", "Relative truncation error for m = 1..m-max");
  add_input_options(profile_cmd, input);
  profile_cmd->add_option("--mode", mode, "exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  profile_cmd->add_option("--m-max", m, "Largest truncation order")->required();
  add_common(profile_cmd, "csv");

  auto* min_cmd = app.add_subcommand("min-terms", "Fewest series terms meeting a relative error");
  add_input_options(min_cmd, input);
  min_cmd->add_option("--re", re, "Required relative error (fraction)")->required();
  add_common(min_cmd, "json");

  auto* table_cmd = app.add_subcommand("table", "Regenerate a reference comparison table");
  table_cmd->add_option("--which", which, "Table number")->required()->check(CLI::Range(1, 3));
  add_common(table_cmd, "text");

  auto* verify_cmd = app.add_subcommand("verify", "Randomized cross-check against the oracles");
  verify_cmd->add_option("--n", vn, "Events per case")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--cases", cases, "Number of random cases")->required();
  verify_cmd->add_option("--seed", seed, "Generator seed")->required();
  verify_cmd->add_option("--trials", trials, "Monte Carlo trials per case")
      ->check(CLI::PositiveNumber);
  add_common(verify_cmd, "json");

  auto* bench_cmd = app.add_subcommand("bench", "Time the symmetric-polynomial series");
  bench_cmd->add_option("--n", vn, "Number of events")->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--m", m, "Truncation order")->required();
  bench_cmd->add_option("--reps", reps, "Repetitions")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "Seed for the random probabilities");
  bench_cmd->add_option("--max-p", max_p, "Probabilities are drawn uniformly from [0, max-p)")
      ->check(CLI::Range(0.0, 1.0));
  add_common(bench_cmd, "json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  auto format_for = [&](CLI::App* cmd) {
    return parse_format(cmd->count("--format") ? format
                                               : cmd->get_option("--format")->get_default_str());
  };

  try {
    if (union_cmd->parsed()) {
      cmd_union(resolve_input(input), decimals, format_for(union_cmd), out);
    } else if (series_cmd->parsed()) {
      cmd_series(resolve_input(input), m, decimals, format_for(series_cmd), out);
    } else if (profile_cmd->parsed()) {
      cmd_profile(resolve_input(input), mode == "exact" ? ErrorMode::kExact : ErrorMode::kApprox, m,
                  decimals, format_for(profile_cmd), out);
    } else if (min_cmd->parsed()) {
      cmd_min_terms(resolve_input(input), re, decimals, format_for(min_cmd), out);
    } else if (table_cmd->parsed()) {
      cmd_table(which, decimals, format_for(table_cmd), out);
    } else if (verify_cmd->parsed()) {
      if (cases == 0) throw UsageError("--cases must be at least 1");
      return cmd_verify(static_cast<std::size_t>(vn), cases, seed, trials, decimals,
                        format_for(verify_cmd), out, err);
    } else if (bench_cmd->parsed()) {
      cmd_bench(static_cast<std::size_t>(vn), m, reps, seed, max_p, format_for(bench_cmd), out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SizeLimitError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kSuccess;
}

}  // namespace unionprob::cli
