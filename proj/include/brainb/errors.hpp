#pragma once

#include <stdexcept>
#include <string>

namespace brainb {

// Invalid SessionConfig or config file contents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (finalize before the end,
// ticking a finished session, mismatched crop dimensions, ...).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed log or trace text. `line` is 1-based, 0 when the input ended early.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : "end of input: " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace brainb
