#ifndef HYPERGERM_ERRORS_HPP
#define HYPERGERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypergerm {

/// Base class for every error the engine raises on purpose.
///
/// `code()` is a stable machine-readable string: the CLI prints it verbatim
/// and exits 1, so the set of codes is part of the external interface.
class EngineError : public std::runtime_error {
public:
  EngineError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Malformed input text. `offset` is the byte offset of the first bad token.
class SyntaxError : public EngineError {
public:
  SyntaxError(std::size_t offset, const std::string& message)
      : EngineError("syntax_error",
                    message + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class UnknownIdentifier : public EngineError {
public:
  explicit UnknownIdentifier(const std::string& name)
      : EngineError("unknown_identifier", "unknown identifier '" + name + "'") {}
};

/// Raised when differentiation meets floor/abs.
class NonSmoothExpression : public EngineError {
public:
  explicit NonSmoothExpression(const std::string& what)
      : EngineError("non_smooth_expression", what) {}
};

/// Numeric evaluation left the real domain (log of a nonpositive value,
/// division by zero, ...).
class DomainError : public EngineError {
public:
  explicit DomainError(const std::string& what)
      : EngineError("domain_error", what) {}
};

/// The expression has no truncated Laurent expansion at 0+ (log x, exp(1/x), ...).
class NotLaurent : public EngineError {
public:
  explicit NotLaurent(const std::string& what)
      : EngineError("not_laurent", what) {}
};

/// Division by a germ that is equal to zero at the tested order.
class DivisionByZeroGerm : public EngineError {
public:
  explicit DivisionByZeroGerm(const std::string& what)
      : EngineError("division_by_zero_germ", what) {}

protected:
  DivisionByZeroGerm(std::string code, const std::string& what)
      : EngineError(std::move(code), what) {}
};

/// Composition argument outside the entire-germ whitelist.
class NotEntire : public EngineError {
public:
  explicit NotEntire(const std::string& what)
      : EngineError("not_entire", what) {}
};

/// A remainder or convergent was requested beyond what the stated precision
/// of the irrational can support.
class PrecisionExhausted : public EngineError {
public:
  explicit PrecisionExhausted(const std::string& what)
      : EngineError("precision_exhausted", what) {}
};

/// Secant update impossible: the residual difference is the zero germ while
/// the residual itself is not. A special case of dividing by a zero germ,
/// with its own code so callers can tell the two apart.
class StalledSecant : public DivisionByZeroGerm {
public:
  explicit StalledSecant(const std::string& what)
      : DivisionByZeroGerm("stalled_secant", what) {}
};

/// Search window cannot even hold the required subset sums.
class WindowTooSmall : public EngineError {
public:
  explicit WindowTooSmall(const std::string& what)
      : EngineError("window_too_small", what) {}
};

}  // namespace hypergerm

#endif  // HYPERGERM_ERRORS_HPP
