#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sieveforge/verdict.hpp"

namespace sieveforge {

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json verdict_to_json(const Verdict& v);

/// Command-level result: echo, named verdicts, structured payload, replay
/// hint for failures, optional timing. JSON or plain-text rendering.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<std::string> notes;
  std::string replay;
  long long timing_ms = -1;  // omitted when negative
  nlohmann::json extra;

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace sieveforge
