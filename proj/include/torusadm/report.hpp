#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "torusadm/strata.hpp"

namespace torusadm {

// FNV-1a over the raw bytes, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(std::uint64_t h);

// Human rendering of one torus coordinate exp(2*pi*i*(re + i*im)):
// "1", "-1", "zeta_m^k", or an explicit exponential when im != 0.
std::string coordinate_str(const Rat& re, const Rat& im);

struct CliOptions {
  std::string verb;
  std::string arrangement_path;
  std::string point_path;  // check / phi / report
  std::string class_path;  // resonance
  bool json = false;
  bool betti = false;
  bool essential = false;
  std::optional<unsigned long long> budget;  // STRATUM_BUDGET when unset
  int jobs = 1;
  std::string forms;  // comma-separated labels for strata / components
};

// Envelope for every machine-readable answer. The payload depends only on
// the inputs; timing sits next to it so reruns stay byte-comparable.
struct ReportDocument {
  std::string tool = "torusadm";
  std::string version = "0.1.0";
  std::string verb;
  std::string input_digest;
  nlohmann::ordered_json payload;
  long long timing_ms = 0;

  nlohmann::ordered_json to_json() const;
};

struct CommandResult {
  ReportDocument doc;
  std::string human;
};

// Runs one verb. Throws InputFormatError / SemanticError / BudgetExceeded
// on bad input; see run_cli for the exit-code mapping.
CommandResult execute(const CliOptions& opts);

// execute() plus printing and exception-to-exit-code mapping:
// 0 success, 2 malformed input, 3 semantically unusable input,
// 4 enumeration budget exceeded, 1 internal error.
int run_cli(const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace torusadm
