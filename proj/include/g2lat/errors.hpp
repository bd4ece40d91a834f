#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g2lat {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed scalar text or interchange file.  `position` is a 0-based byte
// offset into the offending string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A residue-field step needs a finite extension of k that the library does
// not construct (the base ring is not strictly henselian).
class NeedsEtaleExtension : public std::runtime_error {
 public:
  NeedsEtaleExtension(const std::string& what, int degree)
      : std::runtime_error(what + " (needs extension of degree " + std::to_string(degree) + ")"), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation reaches a state that the theory rules out, for
// example a quasi-split Gram profile inside the split octonions.
class Inconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace g2lat
