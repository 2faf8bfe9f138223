#pragma once

#include <stdexcept>
#include <string>

namespace rcgap {

// Successor search ran past the configured ceiling without finding an element.
class GapCeilingError : public std::runtime_error {
 public:
  explicit GapCeilingError(const std::string& what) : std::runtime_error(what) {}
};

// A guess-string or subset enumeration would exceed its configured cap.
class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

// An exact integer would exceed the configured bit cap.
class BitCapError : public std::runtime_error {
 public:
  explicit BitCapError(const std::string& what) : std::runtime_error(what) {}
};

// Iterated values escaped even the log-domain representation.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A file could not be read or parsed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcgap
