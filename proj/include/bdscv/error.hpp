#pragma once

#include <stdexcept>
#include <string>

namespace bdscv {

enum class ErrorKind {
  InvalidSpec,
  InvalidInput,
  InvalidK,
  DegenerateProjection,
  DegenerateVariance,
  UnknownLabelColumn,
  UnknownDataset,
  FetchFailed,
  IoError,
  ParseError,
};

// Library-wide error type. The CLI maps ErrorKind onto process exit codes;
// library callers can switch on kind() without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidK: return "invalid-k";
    case ErrorKind::DegenerateProjection: return "degenerate-projection";
    case ErrorKind::DegenerateVariance: return "degenerate-variance";
    case ErrorKind::UnknownLabelColumn: return "unknown-label-column";
    case ErrorKind::UnknownDataset: return "unknown-dataset";
    case ErrorKind::FetchFailed: return "fetch-failed";
    case ErrorKind::IoError: return "io-error";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

}  // namespace bdscv
