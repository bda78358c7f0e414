#ifndef LEXIKIT_ERRORS_HPP
#define LEXIKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexikit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The candidate scan reached the configured maximum coordinate index.
/// Signals a mis-sized guard, never a mathematical failure.
class SearchBudgetExceeded : public Error {
  public:
    explicit SearchBudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// A base-p digit expansion does not fit the expected window.
class DigitOverflow : public Error {
  public:
    explicit DigitOverflow(const std::string& msg) : Error(msg) {}
};

/// The naive oracle scanned past its hard rank ceiling.
class RankCeilingExceeded : public Error {
  public:
    explicit RankCeilingExceeded(const std::string& msg) : Error(msg) {}
};

/// A structural check was invoked outside its stated hypotheses.
class HypothesisViolated : public Error {
  public:
    explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

/// The requested value is undefined in this parameter regime.
class NotApplicable : public Error {
  public:
    explicit NotApplicable(const std::string& msg) : Error(msg) {}
};

/// Exhaustive enumeration refused: instance too large.
class TooLarge : public Error {
  public:
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

/// Fewer than two distinct words: no minimum distance exists.
class Degenerate : public Error {
  public:
    explicit Degenerate(const std::string& msg) : Error(msg) {}
};

}  // namespace lexikit

#endif
