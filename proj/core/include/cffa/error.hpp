#pragma once

#include <stdexcept>
#include <string>

namespace cffa {

enum class ErrorKind {
  Parse,                // malformed instance/certificate document
  MalformedCertificate, // allocation references unknown agents/jobs
  Capacity,             // instance too large for the chosen algorithm or budget
  Routing,              // solver precondition does not hold for this instance
  Contract,             // caller violated an API precondition
  ClassViolation,       // graph is not in the declared graph class
  Internal,             // solver invariant broken
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure in the library is reported through this type. `code` is a
// short machine-readable tag (e.g. "ETA_RANGE"); `where` points at the
// offending field or line when the error comes from parsing.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message,
        std::string where = {})
      : std::runtime_error(message),
        kind_(kind),
        code_(std::move(code)),
        where_(std::move(where)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  const std::string& where() const noexcept { return where_; }

 private:
  ErrorKind kind_;
  std::string code_;
  std::string where_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string code,
                              const std::string& message,
                              std::string where = {}) {
  throw Error(kind, std::move(code), message, std::move(where));
}

}  // namespace cffa
