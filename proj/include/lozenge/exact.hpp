#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lozenge {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class SymmetryAbsentError : public Error {
 public:
  using Error::Error;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

class UnsupportedActionError : public Error {
 public:
  using Error::Error;
};

class EmbeddingRequiredError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A closed-form value that should have been an integer but is not.
class FormulaError : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned n);
Integer binomial(long n, long k);
// Exact square root; throws FormulaError if n is not a perfect square.
Integer exact_sqrt(const Integer& n);

}  // namespace lozenge
