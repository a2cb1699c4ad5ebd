#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace oagw {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from different group constructions (or coefficient fields).
class ConstructionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input does not match a grammar; `offset` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Canonical (lowest terms, positive denominator) rational num/den.
Rational makeRational(long num, long den = 1);
Rational makeRational(const Integer& num, const Integer& den);

/// Parses "-12", "3/4"; the result is canonical. Throws ParseError.
Rational parseRational(std::string_view text);

std::string toString(const Rational& q);
std::string toString(const Integer& z);

/// Exponent of the prime p in z (z != 0).
unsigned padicValuation(const Integer& z, unsigned long p);

/// True iff q lies in Z_(p): its reduced denominator is not divisible by p.
bool inLocalization(const Rational& q, unsigned long p);

/// p-adic valuation of a nonzero rational (may be negative).
long padicValuation(const Rational& q, unsigned long p);

}  // namespace oagw
