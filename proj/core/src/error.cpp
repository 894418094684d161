#include "trapset/error.hpp"

namespace trapset {

namespace {

std::string with_line(std::size_t line, const std::string& what) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : Error(with_line(line, what)), kind_(kind), line_(line) {}

ParseError::ParseError(Verbatim, Kind kind, std::size_t line, const std::string& what)
    : Error(what), kind_(kind), line_(line) {}

ParseError ParseError::in_context(const std::string& context) const {
  return ParseError(Verbatim{}, kind_, line_, context + ": " + what());
}

const char* to_string(ParseError::Kind kind) noexcept {
  switch (kind) {
    case ParseError::Kind::kMalformedHeader: return "malformed header";
    case ParseError::Kind::kBadToken: return "bad token";
    case ParseError::Kind::kTruncated: return "truncated input";
    case ParseError::Kind::kOutOfRange: return "index out of range";
    case ParseError::Kind::kDegreeListMismatch: return "degree-list/neighbor-list mismatch";
    case ParseError::Kind::kParallelEdge: return "parallel edge";
    case ParseError::Kind::kNonUniformDegree: return "non-uniform variable degree";
    case ParseError::Kind::kLeftDegreeTooSmall: return "left degree below minimum";
    case ParseError::Kind::kGirthTooSmall: return "girth below 6";
    case ParseError::Kind::kMalformedRecord: return "malformed record";
  }
  return "unknown";
}

}  // namespace trapset
