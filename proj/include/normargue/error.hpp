#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace normargue {

enum class ErrorKind {
  Syntax,
  UnknownOperator,
  UnknownAgent,
  DuplicateId,
  DanglingRuleAtom,
  IncompleteCover,
  InvalidArgument,
  TooLarge,
};

const char* to_string(ErrorKind kind);

// Line and column are 1-based; line 0 means "no source position".
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, SourceLocation where = {});

  ErrorKind kind() const noexcept { return kind_; }
  const SourceLocation& where() const noexcept { return where_; }

 private:
  ErrorKind kind_;
  SourceLocation where_;
};

// Raised by the formula parser. `offset` is a byte offset into the parsed
// text; `expected` lists the tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t offset, std::vector<std::string> expected,
              const std::string& detail);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace normargue
