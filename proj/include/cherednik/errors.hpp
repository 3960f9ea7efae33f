#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

/// Base of every error raised by the library. The CLI maps these to exit code 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input that fails validation (bad config values, bad group data). Exit code 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Malformed text input; carries a 1-based line/column position.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

#define CHEREDNIK_ERROR(Name, Base)                                  \
  class Name : public Base {                                        \
   public:                                                          \
    explicit Name(const std::string& what) : Base(#Name ": " + what) {} \
  }

CHEREDNIK_ERROR(DivisionByZero, Error);
CHEREDNIK_ERROR(FieldMismatch, Error);
CHEREDNIK_ERROR(SplittingError, Error);
CHEREDNIK_ERROR(CapExceeded, Error);
CHEREDNIK_ERROR(NonIntegralEntry, ValidationError);
CHEREDNIK_ERROR(EigenvalueNotInField, Error);
CHEREDNIK_ERROR(NotHomomorphism, ValidationError);
CHEREDNIK_ERROR(NotIrreducible, ValidationError);
CHEREDNIK_ERROR(AlgebraMismatch, Error);
CHEREDNIK_ERROR(CoefficientBlowup, Error);
CHEREDNIK_ERROR(NotScalarAction, Error);
CHEREDNIK_ERROR(CutoffExceeded, Error);
CHEREDNIK_ERROR(InconsistentTruncation, Error);
CHEREDNIK_ERROR(NotDecidable, Error);
CHEREDNIK_ERROR(TailDominated, Error);
CHEREDNIK_ERROR(LatticeViolation, Error);
CHEREDNIK_ERROR(UnboundedGenerator, Error);
CHEREDNIK_ERROR(IncompatibleFamily, Error);

#undef CHEREDNIK_ERROR

}  // namespace cherednik
