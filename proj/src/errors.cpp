#include "wqo/errors.hpp"

#include <sstream>
#include <utility>

namespace wqo {

namespace {

std::string parse_message(std::size_t position, const std::vector<std::string>& expected,
                          const std::string& detail) {
  std::ostringstream os;
  os << "parse error at position " << position << ": " << detail;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i != 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& detail)
    : Error(parse_message(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

HypothesisError::HypothesisError(std::string rule, std::string condition)
    : Error("hypothesis-not-met: " + rule + " requires " + condition),
      rule_(std::move(rule)),
      condition_(std::move(condition)) {}

UnsupportedError::UnsupportedError(std::string code, const std::string& detail)
    : Error(code + ": " + detail), code_(std::move(code)) {}

}  // namespace wqo
