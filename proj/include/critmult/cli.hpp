#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace critmult {

enum class Command { Interval, Solve, Expansion, Table };
enum class OutputFormat { Json, Csv };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view s);

/// One CLI invocation. Parameter keys are the flag names without dashes.
struct RunRequest {
  Command command = Command::Interval;
  std::map<std::string, std::string> parameters;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int hypothesis = 2;
inline constexpr int numeric = 3;
} // namespace exit_code

struct RunResult {
  int status = exit_code::ok;
  std::string output;  // serialized result; empty when written to output_path
  std::string message; // diagnostics for stderr
};

/// Executes a request. Never throws for bad input; failures map to the exit
/// statuses above.
RunResult run(const RunRequest& request);

/// Keys accepted by each command.
const std::map<std::string, std::string>& parameter_docs(Command c);

} // namespace critmult
