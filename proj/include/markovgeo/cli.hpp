#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace markovgeo::cli {

// Exit codes: 0 success / true verdict, 1 false verdict, 2 usage or input
// error, 3 numerical failure.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

enum class Verb {
  check,
  reverse,
  project,
  divergence,
  geodesic,
  coords,
  stationary,
  family,
  demo,
};

struct Command {
  Verb verb = Verb::check;
  std::string file;
  std::string file2;
  std::string output;  // empty: standard output
  std::string method = "balance";
  double tol = 1e-9;
  std::string mode;
  std::string kind;
  std::optional<double> t;
  std::optional<int> steps;
  std::string chart;
  std::string test;
  std::string topic;
  int demo_size = 3;
  int demo_samples = 40;
  std::uint64_t seed = 42;
};

/// Thrown when --help is requested; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Parses argv (program name excluded). Throws error(usage_error) on bad
/// input and HelpRequested for help flags.
Command parse(const std::vector<std::string>& argv);

/// Runs one command; verdict-style results map to the exit code. Library
/// errors propagate as markovgeo::error.
int execute(const Command& command, std::ostream& out);

/// Full front end: parse, execute, and map errors to exit codes with a
/// one-line JSON error object on the error stream.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace markovgeo::cli
