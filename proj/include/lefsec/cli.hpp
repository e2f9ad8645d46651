// Command front-end. Each command loads its input files, validates the
// fibration and reports a status:
//   ok       - the question was answered positively (with a witness)
//   refuted  - a homology-level obstruction proves the negative
//   unknown  - bounded search or criterion inconclusive; not a proof
//   error    - malformed input; exit code 2
// Usage errors exit with 1, everything else with 0.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lefsec/section_engine.hpp"

namespace lefsec::cli {

enum class Status { ok, refuted, unknown, error };
const char* to_string(Status s);

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;
};

int exit_code(const CommandResult& r);

CommandResult cmd_check_cert(const std::string& fibration_file, const std::string& cert_file);
CommandResult cmd_h1(const std::string& fibration_file, const std::string& alpha_vector);
CommandResult cmd_double(const std::string& fibration_file, long long m_bound);
/// Exactly one of `moves` ("L1,R3", 1-based positions) and `orbit_depth`.
CommandResult cmd_hurwitz(const std::string& fibration_file, const std::optional<std::string>& moves,
                          const std::optional<unsigned>& orbit_depth);
CommandResult cmd_torus_h1(const std::string& fibration_file);
CommandResult cmd_verify_splitting(const std::string& splitting_file);
CommandResult cmd_search_cert(const std::string& fibration_file, const std::string& alpha_word, SearchBounds bounds);

/// Parses an integer vector written as "1,0,-2,0", "[1, 0, -2, 0]" or "1 0 -2 0".
IntVector parse_int_vector(const std::string& text);

void print_result(const std::string& command, const CommandResult& r, bool as_json, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lefsec::cli
