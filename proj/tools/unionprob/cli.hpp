#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unionprob::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kVerificationFailed = 3,
};

// Malformed or out-of-range input file content; `line` is 1-based.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses the probability list format: one decimal value per line, '#'
/// comment lines and blank lines skipped, LF or CRLF endings.
std::vector<double> parse_probability_list(std::string_view text);
std::vector<double> read_probability_file(const std::string& path);

/// Fixed-point rendering with round-half-even on the binary value; no locale.
std::string format_decimal(double value, int decimals);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unionprob::cli
