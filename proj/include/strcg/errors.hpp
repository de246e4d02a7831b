#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace strcg {

// An explicit enumeration hit its element cap.
class OverflowError : public std::runtime_error {
 public:
  OverflowError(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what + " (element budget " + std::to_string(cap) + ")"),
        cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// Malformed input text; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace strcg
