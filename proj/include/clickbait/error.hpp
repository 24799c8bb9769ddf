#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clickbait {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CLICKBAIT_DEFINE_ERROR(Name)      \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

CLICKBAIT_DEFINE_ERROR(SchemaError);
CLICKBAIT_DEFINE_ERROR(DomainError);
CLICKBAIT_DEFINE_ERROR(CapacityError);
CLICKBAIT_DEFINE_ERROR(StratificationError);
CLICKBAIT_DEFINE_ERROR(ShapeError);
CLICKBAIT_DEFINE_ERROR(NumericError);
CLICKBAIT_DEFINE_ERROR(FitError);
CLICKBAIT_DEFINE_ERROR(LoadError);
CLICKBAIT_DEFINE_ERROR(TrainingError);
CLICKBAIT_DEFINE_ERROR(StateError);
CLICKBAIT_DEFINE_ERROR(CompatibilityError);
CLICKBAIT_DEFINE_ERROR(IntegrityError);
CLICKBAIT_DEFINE_ERROR(ConfigurationError);
CLICKBAIT_DEFINE_ERROR(ProtocolError);
CLICKBAIT_DEFINE_ERROR(TemplateError);
CLICKBAIT_DEFINE_ERROR(UndefinedMetricError);

#undef CLICKBAIT_DEFINE_ERROR

/// Input file does not parse in its declared format. Carries the 1-based line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Network or HTTP-level failure talking to a remote endpoint.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int status, bool retryable)
      : Error(what), status_(status), retryable_(retryable) {}

  /// HTTP status, or 0 when no response was received.
  int status() const noexcept { return status_; }
  bool retryable() const noexcept { return retryable_; }

 private:
  int status_;
  bool retryable_;
};

}  // namespace clickbait
