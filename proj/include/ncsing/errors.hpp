#ifndef NCSING_ERRORS_HPP
#define NCSING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncsing {

/// Violation of a mathematical precondition (cap mismatch, linear terms in a
/// potential, non-invertible substitution, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in the expression grammar; `position` is a 0-based offset
/// into the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace ncsing

#endif
