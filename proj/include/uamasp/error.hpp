#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace uamasp {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LexError : public Error {
 public:
  LexError(const std::string& msg, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

// #show p/n where p is used in the program, but never with arity n.
class ArityError : public Error {
 public:
  using Error::Error;
};

class SafetyError : public Error {
 public:
  SafetyError(const std::string& statement, std::vector<std::string> variables, SourcePos pos);
  const std::vector<std::string>& variables() const { return variables_; }
  SourcePos pos() const { return pos_; }

 private:
  std::vector<std::string> variables_;
  SourcePos pos_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class GroundingError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace uamasp
