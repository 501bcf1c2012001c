#pragma once

#include <stdexcept>
#include <string>

namespace fol {

// Violated precondition on a public operation (empty input, shape
// mismatch, invalid box, ...).
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed on-disk data. Carries the 1-based line number when the
// source is line-oriented (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                    : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Structurally valid file that is incompatible with the running
// configuration (format version, hyperparameter header, checksum).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw ContractViolation(msg);
}

}  // namespace fol
