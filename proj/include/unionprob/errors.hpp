#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace unionprob {

// Raised on any domain violation. When the violation is tied to one element
// of an input sequence, index() names it (zero-based).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
  InvalidInput(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}

  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::optional<std::size_t> index_;
};

// Raised by routines with a hard problem-size cap (the exhaustive oracle).
class SizeLimitError : public std::length_error {
 public:
  SizeLimitError(const std::string& what, std::size_t limit)
      : std::length_error(what), limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace unionprob
