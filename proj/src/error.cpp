#include "normargue/error.hpp"

namespace normargue {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownOperator: return "UnknownOperator";
    case ErrorKind::UnknownAgent: return "UnknownAgent";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingRuleAtom: return "DanglingRuleAtom";
    case ErrorKind::IncompleteCover: return "IncompleteCover";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message, SourceLocation where)
    : std::runtime_error(message), kind_(kind), where_(where) {}

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& detail) {
  std::string msg = detail + " at byte " + std::to_string(offset);
  if (!expected.empty()) {
    msg += "; expected one of:";
    for (const auto& e : expected) msg += " " + e;
  }
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(ErrorKind kind, std::size_t offset, std::vector<std::string> expected,
                         const std::string& detail)
    : Error(kind, describe(offset, expected, detail)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace normargue
