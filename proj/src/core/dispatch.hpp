#pragma once

#include "budget.hpp"
#include "error.hpp"
#include "serialize.hpp"

#include <string>
#include <vector>

namespace fpt {

inline constexpr const char* kVersion = "1.0.0";

struct CommandInfo {
  const char* name;
  const char* summary;
};

const std::vector<CommandInfo>& commands();

// Runs one command on a JSON job and returns the full envelope
// {"command", "input", "result", "version"}. Throws Error on failure.
Json run_command(const std::string& command, const nlohmann::json& input, const Budgets& budgets);

// {"error": {"kind", "message"}}
Json error_json(ErrorKind kind, const std::string& message);

// Budget fields present in `source` override `base`.
Budgets merge_budgets(Budgets base, const nlohmann::json& source);
// "max_multisets=10,max_terms=20" style overrides.
Budgets parse_budget_spec(Budgets base, const std::string& spec);

}  // namespace fpt
