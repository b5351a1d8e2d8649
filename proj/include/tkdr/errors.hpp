#pragma once

#include <stdexcept>
#include <string>

namespace tkdr {

// Position or rank argument outside the structure's domain.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// select() asked for an occurrence that does not exist.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The index lacks what the request needs, such as a query against an
// index saved without its text.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index file problems. Each failure mode has its own class so callers
// (and tests) can tell a foreign file from a damaged one.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MagicMismatch : public FormatError {
 public:
  using FormatError::FormatError;
};

class VersionMismatch : public FormatError {
 public:
  using FormatError::FormatError;
};

class TruncatedData : public FormatError {
 public:
  using FormatError::FormatError;
};

class ChecksumMismatch : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace tkdr
