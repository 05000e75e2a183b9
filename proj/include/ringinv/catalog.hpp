#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringinv/analysis.hpp"

namespace ringinv {

/// A malformed instance file. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A well-formed file describing an invalid ring or automorphism.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<std::size_t> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  /// Generator indices (1-based, as in the file) involved in the failure.
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

struct Instance {
  std::string name;
  FiniteRing ring;
  AutomorphismGroup group;
  std::vector<std::string> tags;  // sorted
  std::string provenance;         // "constructed", "file" or "random(seed=..,index=..)"

  GAction action() const { return GAction::of(group); }
  bool has_tag(const std::string& t) const;
};

/// Labels recomputed from the instance itself: unital / non-unital, nilpotent,
/// semiprime, bad-prime-p, fixed-ring-zero, order-invertible, trivial-group,
/// splitting-exists, proper-splitting, n1-hypotheses-hold.
std::vector<std::string> derive_tags(const Instance& inst, const Caps& caps = {});

struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::int64_t> invariant_factors;
  std::uint64_t units = 0;
  std::uint64_t prime_radical_order = 0;
  std::size_t udim = 0;
  bool udim_exhaustive = true;
  bool unital = false;

  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
  std::string to_string() const;
};
Fingerprint fingerprint(const FiniteRing& r, const Caps& caps = {});
/// Keeps the first instance of every (fingerprint, group order) class.
std::vector<Instance> dedup_by_fingerprint(std::vector<Instance> list, const Caps& caps = {});

std::vector<Instance> named_instances();
std::optional<Instance> find_named(const std::string& name);

struct RandomParams {
  std::uint64_t max_order = 64;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 0;  // 0: 40 per requested instance
  std::size_t jobs = 1;
};

struct RandomBatch {
  std::vector<Instance> instances;
  std::size_t attempted = 0;
  std::size_t valid = 0;            // attempts that produced a valid ring
  std::size_t table_attempts = 0;   // raw structure-constant attempts
  std::size_t table_valid = 0;
  std::size_t rigid = 0;            // instances left with the trivial group
};
/// Deterministic in params.seed, independent of params.jobs.
RandomBatch random_instances(const RandomParams& params);

/// Re-presents the ring on its invariant-factor basis and transports the group.
Instance canonical(const Instance& inst);

std::vector<Instance> parse_instances(const std::string& text);
std::vector<Instance> load_instances(const std::string& path);
/// Canonical text of the instances (see canonical()).
std::string format_instances(const std::vector<Instance>& list);
void save_instances(const std::string& path, const std::vector<Instance>& list);

}  // namespace ringinv
