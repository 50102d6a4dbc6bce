#pragma once

// Regression corpus: a JSON list of cases, each naming an operation, its input and the expected
// result. An expected object only constrains the keys it lists, at every depth.

#include <string>
#include <vector>

#include "rpphilb/io.hpp"

namespace rpphilb {

struct CaseResult {
  std::string id;
  std::string kind;
  bool pass = false;
  Json expected;
  Json actual;         // null when the case threw
  std::string error;   // error code and message when the case threw
};

struct VerifyReport {
  std::vector<CaseResult> cases;
  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
};

// Operation names accepted in the "kind" field.
const std::vector<std::string>& corpus_kinds();

// Runs one case. Throws Error on bad input, including an unknown kind.
Json evaluate_case(const std::string& kind, const Json& input, const Limits& limits = {});

// Throws CorpusError when the document is malformed or has no cases.
VerifyReport verify_corpus(const Json& corpus, const Limits& limits = {});

}  // namespace rpphilb
