#pragma once

// Verification campaigns: key=value configuration, the individual checks and
// a deterministic report.

#include <cstdint>
#include <string>
#include <vector>

#include "superbethe/diagrams.hpp"
#include "superbethe/qarith.hpp"

namespace superbethe {

/// Check names accepted in `checks`, in the order used by "all".
const std::vector<std::string>& known_checks();

struct CampaignConfig {
  std::string preset = "distinguished-covariant";
  int r = 1;
  int s = 0;
  BigRational q{3, 2};
  int n_sites = 2;
  bool homogeneous = false;
  std::vector<int> sector;  // N_a; empty means the check's default
  std::uint64_t seed = 1;
  std::vector<SkewShape> shapes;
  int random_shapes = 0;  // with no explicit shapes, 0 means 20
  int max_rows = 5;
  int max_cols = 4;
  std::vector<std::string> checks;
  double tol = 1e-8;
  std::string out;
  bool corrupt_root = false;
  int a_max = 3;
  int lattice_sites = 3;
  int max_index = 4;

  /// Sets one field from its text form; throws config_error naming the field.
  void set(const std::string& key, const std::string& value);
  /// Checks cross-field constraints; throws config_error.
  void validate() const;
};

/// Parses `key = value` lines; '#' starts a comment. Errors carry the line number.
CampaignConfig parse_config(const std::string& text);
CampaignConfig load_config(const std::string& path);

enum class Verdict { pass, fail, skip };

struct ReportEntry {
  std::string check;
  std::string params;
  Verdict verdict = Verdict::pass;
  std::string witness;
};

struct Report {
  std::vector<ReportEntry> entries;

  /// No entry failed.
  bool passed() const;
  /// One `check=... params="..." verdict=... witness="..."` record per line,
  /// sorted by (check, params).
  std::string render() const;
};

/// Runs every selected check. Check failures become FAIL entries; only
/// configuration errors throw.
Report run_campaign(const CampaignConfig& cfg);

/// Runs a single named check; throws config_error for unknown names.
void run_check(const CampaignConfig& cfg, const std::string& name, Report& report);

}  // namespace superbethe
