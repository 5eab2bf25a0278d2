#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgbccm/capacity_region.hpp"

namespace mgbccm::cli {

enum class Command { region, outer, timeshare, verify, compare };
enum class OutputFormat { csv, json };

Command command_from_string(const std::string& name);
std::string to_string(Command cmd);

/// Config-file or flag error; the message carries the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ChannelPair channel;
  int n_alpha = 201;
  int n_tau = 101;
  OutputFormat format = OutputFormat::csv;
  std::vector<Command> commands;
};

/// Parses the flat key-value config text:
///
///   h = [1.5, 0]
///   g = [1.801, 0.872]
///   power = 10
///   mode = real            # or complex
///   commands = region, verify
///   alpha_grid = 201
///   tau_grid = 101
///   format = csv           # or json
///
/// Vector entries may be complex ("1.5", "2i", "1.5-0.3i"). Unknown keys are
/// rejected by name; malformed values report the line number.
RunConfig parse_config(const std::string& text);

/// One named verification check with its worst residual.
struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct VerificationReport {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  RatePoint corner1;
  RatePoint corner2;
  bool degenerate = false;
  bool pass = false;
  std::vector<CheckResult> checks;
};

/// Runs the full identity suite on one channel: eigenvalue floor, the
/// rate-quotient identities, power traces, monotonicity, the converse
/// identities, root assignment on sampled covariances, and inner/outer
/// coincidence.
VerificationReport build_verification_report(const ChannelPair& ch, int n_alpha);

std::string report_to_json(const ChannelPair& ch, const VerificationReport& report);

/// Executes the selected commands, writing outputs under out_dir.
/// Returns 0 when every verification passed, 2 otherwise.
int run(const RunConfig& config, const std::filesystem::path& out_dir);

}  // namespace mgbccm::cli
