#pragma once

#include <stdexcept>
#include <string>

namespace grasp {

struct IngestError : std::runtime_error {
  explicit IngestError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EditError : std::runtime_error {
  explicit EditError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MetricUndefined : std::runtime_error {
  explicit MetricUndefined(const std::string& msg) : std::runtime_error(msg) {}
};

struct DisconnectedError : std::runtime_error {
  explicit DisconnectedError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutputError : std::runtime_error {
  explicit OutputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace grasp
