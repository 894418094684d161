#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trapset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or parameter-range violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (alist, catalog, normal-graph text, graph6).
/// `line()` is 1-based; 0 when the failure is not tied to a line.
class ParseError : public Error {
 public:
  enum class Kind {
    kMalformedHeader,
    kBadToken,
    kTruncated,
    kOutOfRange,
    kDegreeListMismatch,
    kParallelEdge,
    kNonUniformDegree,
    kLeftDegreeTooSmall,
    kGirthTooSmall,
    kMalformedRecord,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

  /// Same error with "context: " prepended to the message (e.g. a file path).
  ParseError in_context(const std::string& context) const;

 private:
  struct Verbatim {};
  ParseError(Verbatim, Kind kind, std::size_t line, const std::string& what);

  Kind kind_;
  std::size_t line_;
};

const char* to_string(ParseError::Kind kind) noexcept;

/// A seed handed to the expansion engine that is not an elementary trapping
/// set in T.
class InvalidSeed : public InvalidArgument {
 public:
  InvalidSeed(std::size_t index, const std::string& what)
      : InvalidArgument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace trapset
