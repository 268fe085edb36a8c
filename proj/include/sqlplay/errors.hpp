#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqlplay {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string message) : std::runtime_error(std::move(message)) {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

// Lexical or grammatical failure while parsing SQL text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t position)
      : Error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// Identifier that does not resolve against the schema.
class BindError : public Error {
 public:
  BindError(std::string message, std::string name,
            std::vector<std::string> candidates = {})
      : Error(std::move(message)),
        name_(std::move(name)),
        candidates_(std::move(candidates)) {}
  const std::string& name() const { return name_; }
  const std::vector<std::string>& candidates() const { return candidates_; }

 private:
  std::string name_;
  std::vector<std::string> candidates_;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class AgentUnreachable : public Error {
 public:
  using Error::Error;
};

class AgentProtocolError : public Error {
 public:
  using Error::Error;
};

class NoCompatibleTemplate : public Error {
 public:
  using Error::Error;
};

class FillFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sqlplay
