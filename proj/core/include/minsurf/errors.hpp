#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

// Base class for every failure raised by the library. Callers that only
// care about "something went wrong" catch this; the CLI maps subclasses to
// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero / constant polynomials, all-zero data and similar inputs for which
// the requested quantity is undefined.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Laurent expansion of the identically zero function.
class ZeroFunction : public Error {
 public:
  using Error::Error;
};

// Structural problems with a Weierstrass datum (wrong arity, missing
// punctures, basepoint on a puncture).
class InvalidDatum : public Error {
 public:
  using Error::Error;
};

// Evaluation requested at, or numerically indistinguishable from, a puncture.
class NearSingularity : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double previous, double last)
      : Error(what), previous_(previous), last_(last) {}
  double previous() const { return previous_; }
  double last() const { return last_; }

 private:
  double previous_;
  double last_;
};

// An identity that must hold for valid data was violated beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Asymptotic model requested for an end of order <= -3.
class ModelUndefined : public Error {
 public:
  using Error::Error;
};

class NumericInstability : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Out-of-range catalog parameters, unknown catalog names.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace minsurf
