#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nshift {

// Base class for every error raised by the library. Subcommands map these
// onto process exit codes; tests catch the concrete types.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- expression layer ----

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class UnknownIdentifierError : public Error {
public:
  UnknownIdentifierError(const std::string& name, std::size_t offset)
      : Error("unknown identifier '" + name + "' (at offset " + std::to_string(offset) + ")"),
        name_(name),
        offset_(offset) {}
  const std::string& name() const { return name_; }
  std::size_t offset() const { return offset_; }

private:
  std::string name_;
  std::size_t offset_;
};

// Hard evaluation failure (log of non-positive, division by zero, ...).
// Carries the offending subexpression so reports can name it.
class EvalDomainError : public Error {
public:
  EvalDomainError(const std::string& what, const std::string& subexpr, std::size_t offset)
      : Error(what + " in subexpression '" + subexpr + "' (at offset " + std::to_string(offset) + ")"),
        subexpr_(subexpr),
        offset_(offset) {}
  const std::string& subexpression() const { return subexpr_; }
  std::size_t offset() const { return offset_; }

private:
  std::string subexpr_;
  std::size_t offset_;
};

// ---- geometry / fields ----

class OutOfDomainError : public Error {
public:
  using Error::Error;
};

class SingularMetricError : public Error {
public:
  using Error::Error;
};

class RankDeficiencyError : public Error {
public:
  using Error::Error;
};

// W_v vanished, or a state forbidden by the regularity condition was hit.
class RegularityError : public Error {
public:
  using Error::Error;
};

class ZeroVelocityError : public Error {
public:
  using Error::Error;
};

class GaugeError : public Error {
public:
  using Error::Error;
};

class TransversalityError : public Error {
public:
  using Error::Error;
};

// ---- Pfaff / reconstruction ----

class IncompatibleSectionError : public Error {
public:
  using Error::Error;
};

class EscapeError : public Error {
public:
  using Error::Error;
};

class BracketError : public Error {
public:
  using Error::Error;
};

class NonClosedFormError : public Error {
public:
  using Error::Error;
};

// ---- scenario / config ----

class ConfigError : public Error {
public:
  using Error::Error;
};

class MismatchError : public Error {
public:
  using Error::Error;
};

}  // namespace nshift
