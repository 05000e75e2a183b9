#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ringinv/catalog.hpp"
#include "ringinv/theorems.hpp"

namespace ringinv {

enum ExitCode { kOk = 0, kUsage = 1, kParseError = 2, kValidationError = 3, kCounterexample = 4 };

struct RunConfig {
  Caps caps;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string out;  // empty: no report file
  std::vector<TheoremId> theorems = all_theorems();
  MaskSet masks;
};

/// "k=v,k=v" into caps; throws std::invalid_argument on unknown names or
/// non-positive values.
void parse_caps(const std::string& text, Caps& caps);
/// "id,id,..." or "all".
std::vector<TheoremId> parse_theorems(const std::string& text);
/// "THEOREM:hypothesis", e.g. "N2:2".
std::pair<TheoremId, std::string> parse_mask(const std::string& text);

/// Applies RINGINV_CAPS, RINGINV_SEED, RINGINV_JOBS, RINGINV_THEOREMS,
/// RINGINV_MASK (comma separated) and RINGINV_OUT from `getenv`.
void apply_environment(RunConfig& cfg, const std::function<const char*(const char*)>& getenv);

/// Parses and validates every instance in the file.
int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

/// Checks the theorems on every instance, writes the JSON report to cfg.out
/// (when set) and a verdict table to `out`.
int cmd_check(const std::vector<Instance>& instances, const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// The report alone, sorted by (theorem, ring, group).
std::vector<TheoremReport> run_checks(const std::vector<Instance>& instances, const RunConfig& cfg);

void cmd_profile(const Instance& inst, const Caps& caps, std::ostream& out);

/// Prints the instances with order, group, fingerprint and tags; writes the
/// canonical file and a manifest (path + ".manifest.json") when `path` is set.
int cmd_catalog(const std::vector<Instance>& instances, const std::string& path, std::uint64_t seed,
                std::ostream& out);

}  // namespace ringinv
