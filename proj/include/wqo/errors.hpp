#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqo {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (pm(0), left_subtract(a, b) with a > b, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// A compositional rule was needed but its side condition does not hold.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string rule, std::string condition);

  const std::string& rule() const noexcept { return rule_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string rule_;
  std::string condition_;
};

class UnsupportedError : public Error {
 public:
  UnsupportedError(std::string code, const std::string& detail);

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// The finite oracle refuses to materialize a structure above its size guard.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant the engine relies on was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wqo
