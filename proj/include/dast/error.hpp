#pragma once

#include <stdexcept>
#include <string>

namespace dast {

/// Broad failure classes; the CLI maps these onto process exit codes.
enum class ErrorKind {
  Io,          // unreadable/unwritable files
  Parse,       // syntax errors in the rule DSL or term strings
  Validation,  // structurally well-formed but semantically invalid input
  Limit,       // a derivation guard tripped
  Data,        // malformed CSV/JSON payloads
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : std::move(message)),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

inline Error io_error(std::string msg) { return Error(ErrorKind::Io, std::move(msg)); }
inline Error parse_error(std::string msg, int line = 0) {
  return Error(ErrorKind::Parse, std::move(msg), line);
}
inline Error validation_error(std::string msg, int line = 0) {
  return Error(ErrorKind::Validation, std::move(msg), line);
}
inline Error data_error(std::string msg, int line = 0) {
  return Error(ErrorKind::Data, std::move(msg), line);
}

}  // namespace dast
