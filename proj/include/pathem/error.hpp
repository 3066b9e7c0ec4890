#ifndef PATHEM_ERROR_HPP
#define PATHEM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathem {

/// One build- or validation-time problem, attributable to a config field.
struct Diagnostic {
  std::string where;    // cell id, "links", "env", ... ; empty for global
  std::string field;    // offending field path within the config document
  std::string message;

  std::string str() const {
    std::string s;
    if (!where.empty()) s += where + ": ";
    if (!field.empty()) s += field + ": ";
    return s + message;
  }
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed token in user input (rates, durations, sizes, flags).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Config rejected by a cell-kind schema; carries field-level diagnostics.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<Diagnostic> diags)
      : Error(join(diags)), diagnostics(std::move(diags)) {}
  ConfigError(std::string where, std::string field, std::string message)
      : ConfigError({Diagnostic{std::move(where), std::move(field), std::move(message)}}) {}

  std::vector<Diagnostic> diagnostics;

 private:
  static std::string join(const std::vector<Diagnostic>& ds) {
    std::string s;
    for (const auto& d : ds) {
      if (!s.empty()) s += "; ";
      s += d.str();
    }
    return s.empty() ? "invalid config" : s;
  }
};

/// Channel graph rejected at build time (cycles, dangling links, ports).
class BuildError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// virtual_advance() with no pending deadline: the program is idle, not done.
class ClockIdleError : public Error {
 public:
  ClockIdleError() : Error("virtual clock idle: no pending deadlines") {}
};

/// Missing OS privilege (raw sockets, namespaces).
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what) : Error(what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace pathem

#endif
