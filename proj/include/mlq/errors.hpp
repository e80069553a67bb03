#pragma once

#include <stdexcept>
#include <string>

namespace mlq {

// Simulation exceeded the configured event budget. Never silently truncate.
class EventCapError : public std::runtime_error {
 public:
  explicit EventCapError(const std::string& what) : std::runtime_error(what) {}
};

// Talbot and Gaver-Stehfest disagree beyond tolerance.
class InversionError : public std::runtime_error {
 public:
  explicit InversionError(const std::string& what) : std::runtime_error(what) {}
};

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Fractional ODE stepper failed to reach the requested accuracy.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mlq
