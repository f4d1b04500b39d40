#ifndef QETA_ERRORS_HPP
#define QETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qeta {

// Invalid argument combinations (basis mismatch, length mismatch, ...).
class UsageError : public std::invalid_argument {
public:
  explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Values outside an operation's domain (index/subset out of range, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Division by zero, 0^negative, non-invertible series constant term.
class ArithmeticError : public std::runtime_error {
public:
  explicit ArithmeticError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation of a rational function where its denominator vanishes.
class PoleError : public ArithmeticError {
public:
  explicit PoleError(const std::string& msg) : ArithmeticError(msg) {}
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally well-formed input that fails a semantic check
// (e.g. a non-quasisymmetric polynomial fed to the M-extractor).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qeta

#endif
