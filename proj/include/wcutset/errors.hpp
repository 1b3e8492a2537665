#pragma once

#include <stdexcept>
#include <string>

namespace wcutset {

// Failure while reading one of the text formats; carries the 1-based line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

// The input is larger than a brute-force oracle is willing to handle.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A benchmark result failed its re-verification.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wcutset
