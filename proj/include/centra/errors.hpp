#ifndef CENTRA_ERRORS_HPP
#define CENTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace centra {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Table text could not be parsed. Carries a 1-based line number when the
// offending line is known (0 otherwise).
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Cycle notation could not be parsed (repeated point, point out of range, ...).
class MalformedCycle : public Error {
 public:
  using Error::Error;
};

// An element index fell outside {0..n-1}.
class ElementOutOfRange : public Error {
 public:
  using Error::Error;
};

// Two objects that must live on the same point set do not.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

// A table failed the Latin-square check where a quasigroup was required.
class NotAQuasigroup : public Error {
 public:
  using Error::Error;
};

// A table has no two-sided identity where a loop was required.
class NotALoop : public Error {
 public:
  using Error::Error;
};

// An operation was asked to run above its configured order cap.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

// Generator closure grew past the requested order.
class ClosureOverflow : public Error {
 public:
  using Error::Error;
};

// A permutation set is not sharply transitive, so no table can be rebuilt
// from it.
class NotSharplyTransitive : public Error {
 public:
  using Error::Error;
};

// A generated table does not satisfy the identity law it was built under.
class LawViolation : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree by theorem disagreed; this always indicates a
// bug in this library, never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace centra

#endif  // CENTRA_ERRORS_HPP
