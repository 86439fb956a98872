#pragma once

#include <stdexcept>
#include <string>

namespace cprex {

// Malformed or inconsistent input data (bad TSV line, offset mismatch, ...).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Caller misuse: bad flag values, impossible requests, missing files.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cprex
