#pragma once

#include <stdexcept>
#include <string>

namespace meshfield {

// File-level failures: missing files, unreadable or truncated data.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed content inside an otherwise readable file.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration or flag combinations; maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meshfield
