#pragma once

// Experiment harness behind the `orthogrid` executable. Subcommands:
// enumerate, shapes, grids (CSV); genus-check, stats, report (JSON).
// Exit codes: 0 ok, 2 configuration error, 3 budget exceeded,
// 4 internal invariant violation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orthogrid/equistats/equistats.hpp"
#include "orthogrid/exactla/integer.hpp"

namespace orthogrid::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kBudgetExceeded = 3, kInvariantViolation = 4 };

struct RunConfig {
  std::string command;
  int d = 3;
  std::vector<Integer> Ds;
  std::vector<std::int64_t> primes;
  SampleMode mode = SampleMode::orbit;
  std::string out;  // empty: stdout
  std::string in;   // optional input artifact (CSV from an earlier stage)
  std::uint64_t seed = kDefaultCapSeed;
  int caps = kDefaultCapCount;
  double budget = kDefaultSearchBudget;
  std::string format;  // csv or json; defaults by command
};

// Canonical JSON text of the config (keys sorted, no whitespace). Paths
// are recorded as given.
std::string config_json(const RunConfig& c);

// Throws DomainError on inconsistent flags.
void validate(RunConfig& c);

// "3,5,7" or "lo:hi" (inclusive) into a list.
std::vector<Integer> parse_d_list(const std::string& s);
std::vector<std::int64_t> parse_prime_list(const std::string& s);

// Runs one configured command and returns the artifact text.
std::string execute(const RunConfig& c, std::ostream& log);

// Full command line (args[0] is the program name). Writes the artifact to
// --out or `out`, diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

// Appends "# sha256: <hex>\n" computed over everything before it.
std::string seal_csv(std::string body);
// Adds a "sha256" member computed over the compact dump without it.
std::string seal_json(const std::string& compact_without_hash);

}  // namespace orthogrid::cli
