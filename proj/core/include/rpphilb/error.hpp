#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rpphilb {

// Exact integers for polynomial coefficients and kernel vectors.
using Integer = boost::multiprecision::cpp_int;

// Labels of fillings and multiplicities of factorisations.
using Value = std::int64_t;

enum class ErrorCode {
  ParseError,
  InvalidInput,
  BoxNotInDiagram,
  DiagramTooLarge,
  DiagramMismatch,
  ZeroInput,
  SearchTooLarge,
  NonMonicDivisor,
  NoEliminableVariable,
  UnsupportedCurve,
  BudgetExceeded,
  NonprimeModulus,
  UnsupportedOption,
  CorpusError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Errors that signal an exhausted configurable cap rather than bad input.
bool is_cap_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string offending_input = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& offending_input() const noexcept { return offending_input_; }

 private:
  ErrorCode code_;
  std::string offending_input_;
};

// Caps guarding the exhaustive searches. All of them are overridable from the CLI.
struct Limits {
  std::size_t max_boxes = 30;
  Value max_weight = 12;
  std::size_t max_indicators = 64;
  std::uint64_t budget = 10'000'000;
  int max_prime = 7;
};

}  // namespace rpphilb
