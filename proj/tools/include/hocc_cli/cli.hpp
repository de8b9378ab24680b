#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hocc::cli {

struct RunConfig {
  std::string model = "ray";
  int order = 1;
  double snr_start_db = 0.0;
  double snr_stop_db = 40.0;
  std::size_t points = 41;
  std::vector<std::string> methods{"quadrature", "high"};
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 20160401;
  double eps = 1e-3;
  std::array<double, 4> weights{0.25, 0.25, 0.25, 0.25};
  int delta_start = 1;
  std::string out;  // empty: stdout
  unsigned threads = 0;

  /// Throws DomainError on an unusable combination (points < 2, start >= stop, ...).
  void validate() const;
};

/// One `key = value` line of a config file.
struct ConfigEntry {
  std::string key;  // canonical flag name without dashes, e.g. "snr-db"
  std::string value;
  int line;
};

/// Reads `key = value` lines; '#' starts a comment, blank lines are skipped,
/// '_' in keys is read as '-'. Throws ParseError with the line (and column)
/// of the first malformed line or unknown key.
std::vector<ConfigEntry> read_config(std::istream& in);

/// "START:STOP" in dB.
std::pair<double, double> parse_snr_range(const std::string& text);

/// Comma-separated list; empty items are rejected.
std::vector<std::string> parse_list(const std::string& text);

std::array<double, 4> parse_weights(const std::string& text);

/// CSV `snr_db,method,order,value,err`, one row per grid point and method.
void cmd_curve(const RunConfig& cfg, std::ostream& csv, std::ostream& log);

/// '#'-prefixed report lines followed by the CSV `snr,snr_db,objective` of the
/// boundary objective over the scan grid. With cfg.out set, the report goes to
/// `report` and the CSV to `csv`.
void cmd_boundary(const RunConfig& cfg, std::ostream& report, std::ostream& csv, std::ostream& log);

/// Runs the invariant suite and prints a pass/fail table. Returns the number
/// of failed checks.
int cmd_validate(const RunConfig& cfg, bool all_models, std::ostream& out);

/// Full command line: `hocc <curve|boundary|validate> [flags]`. Returns the
/// process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form (locale-independent).
std::string format_number(double v);

}  // namespace hocc::cli
