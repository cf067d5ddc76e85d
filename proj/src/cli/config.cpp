#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "orthogrid/cli/cli.hpp"
#include "orthogrid/errors.hpp"

namespace orthogrid::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw DomainError("not an integer: '" + s + "'");
  return z;
}

bool is_csv_command(const std::string& c) { return c == "enumerate" || c == "shapes" || c == "grids"; }

}  // namespace

std::vector<Integer> parse_d_list(const std::string& s) {
  std::vector<Integer> out;
  if (const auto colon = s.find(':'); colon != std::string::npos) {
    const Integer lo = parse_integer(s.substr(0, colon));
    const Integer hi = parse_integer(s.substr(colon + 1));
    if (hi < lo) throw DomainError("empty D range '" + s + "'");
    if (hi - lo > 10000000) throw DomainError("D range '" + s + "' is too long");
    for (Integer D = lo; D <= hi; ++D) out.push_back(D);
    return out;
  }
  for (const auto& part : split(s, ',')) out.push_back(parse_integer(part));
  if (out.empty()) throw DomainError("empty D list");
  return out;
}

std::vector<std::int64_t> parse_prime_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(s, ',')) {
    const Integer p = parse_integer(part);
    if (p == 2 || !is_prime(p)) throw DomainError("--p expects odd primes, got " + part);
    out.push_back(to_int64(p));
  }
  return out;
}

std::string config_json(const RunConfig& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["d"] = c.d;
  std::vector<std::string> ds;
  for (const auto& D : c.Ds) ds.push_back(D.get_str());
  j["D"] = ds;
  j["p"] = c.primes;
  j["mode"] = to_string(c.mode);
  j["seed"] = c.seed;
  j["caps"] = c.caps;
  j["budget"] = c.budget;
  j["format"] = c.format;
  j["in"] = c.in;
  return j.dump();
}

void validate(RunConfig& c) {
  if (c.d < kMinDimension || c.d > kMaxDimension) throw DomainError("--d must lie in [3, 8]");
  if (!(c.budget > 0)) throw DomainError("--budget must be positive");
  if (c.caps < 1) throw DomainError("--caps must be positive");
  for (const auto& D : c.Ds)
    if (D < 1) throw DomainError("D must be positive");
  if (c.Ds.empty() && c.in.empty()) throw DomainError("one of --D, --D-seq or --in is required");
  if (c.format.empty()) c.format = is_csv_command(c.command) ? "csv" : "json";
  if (is_csv_command(c.command) && c.format != "csv") throw DomainError(c.command + " writes csv");
  if (!is_csv_command(c.command) && c.format != "json") throw DomainError(c.command + " writes json");
  if (c.command == "genus-check" && c.primes.empty()) throw DomainError("genus-check needs --p");
  if (c.command == "enumerate" && !c.in.empty()) throw DomainError("enumerate does not take --in");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orthogrid: orthogonal lattices of integer points on spheres"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string d_single, d_seq, primes, mode = "orbit";
  for (const char* name : {"enumerate", "shapes", "grids", "genus-check", "stats", "report"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--d", cfg.d, "ambient dimension (3..8)");
    sub->add_option("--D", d_single, "squared radius");
    sub->add_option("--D-seq", d_seq, "comma list or lo:hi range of squared radii");
    sub->add_option("--p", primes, "comma list of odd primes");
    sub->add_option("--mode", mode, "orbit or raw");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--in", cfg.in, "input CSV from enumerate/shapes/grids");
    sub->add_option("--seed", cfg.seed, "seed of the cap family");
    sub->add_option("--caps", cfg.caps, "number of caps");
    sub->add_option("--budget", cfg.budget, "maximum search volume");
    sub->add_option("--format", cfg.format, "csv or json");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    const int code = app.exit(e, os, err);
    out << os.str();
    return code == 0 ? kOk : kConfigError;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.mode = parse_sample_mode(mode);
    if (!d_single.empty() && !d_seq.empty()) throw DomainError("give --D or --D-seq, not both");
    if (!d_single.empty()) cfg.Ds = {parse_integer(d_single)};
    if (!d_seq.empty()) cfg.Ds = parse_d_list(d_seq);
    if (!primes.empty()) cfg.primes = parse_prime_list(primes);
    validate(cfg);
    const std::string artifact = execute(cfg, err);
    if (cfg.out.empty()) {
      out << artifact;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw DomainError("cannot write " + cfg.out);
      f << artifact;
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace orthogrid::cli
