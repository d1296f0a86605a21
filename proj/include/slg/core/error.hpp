#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slg {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: flags, configuration values, parameters, gold spans.
/// The command line maps these to exit status 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidTermError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidPolicyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed line in one of the text formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), source_(source), line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class ReferentialIntegrityError : public Error {
 public:
  using Error::Error;
};

class EmptySeedError : public Error {
 public:
  using Error::Error;
};

class DegenerateSeedsError : public Error {
 public:
  using Error::Error;
};

class InconsistentSeedsError : public Error {
 public:
  using Error::Error;
};

class DegenerateFeaturesError : public Error {
 public:
  using Error::Error;
};

class NumericOverflowError : public Error {
 public:
  using Error::Error;
};

class OutOfVocabularyError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace slg
