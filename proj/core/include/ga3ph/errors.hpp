#pragma once

#include <stdexcept>
#include <string>

namespace ga3ph {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root finding requested on a constant or zero polynomial.
class NoRootsError : public Error {
 public:
  using Error::Error;
};

// Division by an identically-zero rational function.
class DivByZeroError : public Error {
 public:
  using Error::Error;
};

// Inversion of a multivector whose Clifford norm vanishes.
class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

// e0 + G*C (or e0 - Q*G) is not invertible: the loop has no solution.
class AlgebraicLoopError : public Error {
 public:
  using Error::Error;
};

class PlantNotStableError : public Error {
 public:
  using Error::Error;
};

class QNotAdmissibleError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlantError : public Error {
 public:
  using Error::Error;
};

// Filter cannot be realized as a causal difference equation.
class NotRealizableError : public Error {
 public:
  using Error::Error;
};

// Prewarp frequency at or above Nyquist.
class BadPrewarpError : public Error {
 public:
  using Error::Error;
};

// MNA system is singular (floating subcircuit, source loop, ...).
class SingularError : public Error {
 public:
  using Error::Error;
};

// Simulated state grew beyond the divergence bound.
class DivergedError : public Error {
 public:
  explicit DivergedError(const std::string& what, double at_time)
      : Error(what), time(at_time) {}
  double time;
};

// Diagonal entries of a supposedly symmetric closed loop disagree.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

// Netlist / config text could not be parsed; carries a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int at_line) : Error(what), line(at_line) {}
  int line;
};

}  // namespace ga3ph
