#pragma once

#include <stdexcept>
#include <string>

namespace ljfix {

enum class ErrorCode {
  domain,              // input outside the mathematical domain (q <= 0, chi <= 0)
  argument,            // malformed argument (counts, ranges, sizes)
  level_out_of_range,  // crossing level outside (-epsilon, 0)
  degenerate_level,    // crossing level exactly at the well bottom
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(ErrorCode::argument, what) {}
};

class LevelOutOfRangeError : public Error {
 public:
  explicit LevelOutOfRangeError(const std::string& what)
      : Error(ErrorCode::level_out_of_range, what) {}
};

class DegenerateLevelError : public Error {
 public:
  explicit DegenerateLevelError(const std::string& what)
      : Error(ErrorCode::degenerate_level, what) {}
};

}  // namespace ljfix
