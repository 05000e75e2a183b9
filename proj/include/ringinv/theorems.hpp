#pragma once

#include <json.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringinv/analysis.hpp"

namespace ringinv {

enum class TheoremId {
  BI_1_4,
  MONT_1_7,
  N1,
  C1_5,
  N2,
  COR_A8,
  TH_1_9,
  TH_4APR,
  RAD_1_4,
  B5APR,
  LEVITZKI,
  TH_8APR,
  COR_B8,
  A5APR,
  LEM_A6,
  LEM_B6,
  LEM_C6,
  COR_C8
};
const std::vector<TheoremId>& all_theorems();
const char* to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& s);

enum class Status { Holds, Fails, Capped, HoldsDominated, Masked };
const char* to_string(Status s);
enum class Verdict { Verified, Vacuous, Counterexample, Skipped };
const char* to_string(Verdict v);

struct Clause {
  std::string id;  // "1", "2", "P", ... for hypotheses; empty for conclusions
  std::string text;
  Status status = Status::Holds;
  std::optional<std::string> witness;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::BI_1_4;
  std::string ring;
  std::string group;
  std::vector<Clause> hypotheses;
  Clause conclusion;
  Verdict verdict = Verdict::Verified;
  Caps caps;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

/// Hypotheses switched off, as (theorem, hypothesis id) pairs.
using MaskSet = std::set<std::pair<TheoremId, std::string>>;

/// b^(c^k): used for the bounds h(G)^d, h(G(p))^d(p) and h(N(p))^(h(G(p))^d(p)).
struct BoundExpr {
  BigInt base;
  BigInt exp_base;
  std::uint64_t exp_exp = 1;

  /// value >= k
  bool at_least(std::uint64_t k) const;
  std::string to_string() const;
};

TheoremReport check(TheoremId id, Analysis& a, const MaskSet& masks = {});
std::vector<TheoremReport> check_all(Analysis& a, const std::vector<TheoremId>& ids, const MaskSet& masks = {});

/// Unconditional facts checked on every instance: rad(R) cap R^G inside
/// rad(R^G), R^G cap n(R) inside n(R^G), and the two radical algorithms
/// agreeing on R and R^G. Returns the failures (empty when all hold).
std::vector<std::string> background_violations(Analysis& a);

/// Runs the checks on every instance and returns the counterexample reports
/// that reproduce identically on a fresh re-check. `budget` limits the number
/// of instances examined.
std::vector<TheoremReport> counterexample_search(const std::vector<GAction>& instances,
                                                 const std::vector<TheoremId>& ids, const MaskSet& masks,
                                                 const Caps& caps, std::uint64_t seed, std::size_t budget);

/// Coordinates "(c1,c2,...)" of an element.
std::string format_element(const FiniteRing& r, Elem x);
/// Element list for small subgroups, otherwise order and generators.
std::string format_subgroup(const FiniteRing& r, const Subgroup& s);

nlohmann::ordered_json to_json(const TheoremReport& r);
nlohmann::ordered_json to_json(const std::vector<TheoremReport>& rs);
/// Sorts by (theorem, ring, group).
void sort_reports(std::vector<TheoremReport>& rs);

}  // namespace ringinv
