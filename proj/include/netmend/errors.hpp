#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netmend {

/// Invalid run configuration (bad flag combination, bad generator parameters).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure (unreadable input, unwritable output).
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// A node has no transaction history, so its trust value is undefined.
class UndefinedTrustError : public std::runtime_error {
  public:
    explicit UndefinedTrustError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netmend
