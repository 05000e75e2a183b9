#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringinv/invariants.hpp"

namespace ringinv {

/// Search and enumeration limits shared by every computation on an instance.
struct Caps {
  std::size_t ideal_scan = 256;        // exhaustive ideal lattices up to this ring order
  std::size_t dp = 16;                 // d(p) and d search
  std::size_t nilpotency = 64;         // power iterations
  std::size_t udim = 256;              // exhaustive uniform dimension up to this order
  std::size_t group = 720;             // automorphism group closure
  std::size_t splittings = 64;         // complements collected by the splitting search
  std::size_t splitting_nodes = 20000; // search nodes for the splitting search
  std::size_t ideal_count = 4096;      // ideals per lattice
  std::size_t samples = 64;            // sampled invariant ideals above ideal_scan

  /// (name, value) pairs in a fixed order.
  std::vector<std::pair<std::string, std::size_t>> items() const;
  /// Sets a cap by name; false for unknown names or zero values.
  bool set(const std::string& name, std::size_t value);
};

enum class Tri { Yes, No, Unknown };

/// Lazily computed data about one (ring, group) pair. Not thread-safe; use
/// one Analysis per worker.
class Analysis {
 public:
  explicit Analysis(GAction action, Caps caps = {}, std::uint64_t seed = 0);
  ~Analysis();
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const GAction& action() const { return action_; }
  const FiniteRing& ring() const { return action_.ring(); }
  const AutomorphismGroup& group() const { return action_.group; }
  std::size_t n() const { return action_.n(); }
  const Subgroup& fixed() const { return action_.fixed; }
  const Caps& caps() const { return caps_; }
  std::uint64_t seed() const { return seed_; }

  const SubringRing& fixed_ring();
  const BadPrimeProfile& bad_primes();
  const Subgroup& prime_radical();
  const Subgroup& jacobson_radical();
  /// Radicals of R^G, in the coordinates of R.
  const Subgroup& fixed_prime_radical();
  const Subgroup& fixed_jacobson_radical();
  const Subgroup& trace_image();
  const NilpotencyResult& nilpotency();
  const NilpotencyResult& trace_nilpotency();

  bool order_invertible() const;
  bool torsion_free(std::int64_t n) const;
  bool fixed_torsion_free(std::int64_t n) const;

  const IdealLattice& invariant_ideals(Side side);
  /// Sided ideals of R^G in the coordinates of the ring R^G.
  const IdealLattice& fixed_ideals(Side side);

  const SplittingSearch& splittings();
  const ProperSplittingCheck& proper_check(std::size_t splitting, Side side);
  /// Yes with the index of a proper splitting verified on an exhaustive
  /// lattice; No when the search was exhaustive and every splitting has a
  /// violating ideal.
  Tri proper_splitting_group(Side side, std::size_t* index = nullptr);
  const std::optional<Splitting>& averaging();

  const UdimCertificate& udim(Side side);
  const UdimCertificate& fixed_udim(Side side);

  /// l_R(R / bottom) for a sided ideal bottom of R.
  std::size_t length(const Subgroup& bottom, Side side);
  /// l_{R^G}(R^G / bottom) for a sided ideal bottom of R^G in R coordinates.
  std::size_t fixed_length(const Subgroup& bottom, Side side);

  struct Reduction {
    QuotientRing quotient;
    InducedGroup induced;
    std::unique_ptr<Analysis> analysis;
    /// Image of R^G in the quotient.
    Subgroup image_of_fixed;
  };
  Reduction& by_prime_radical();
  Reduction& by_jacobson_radical();

 private:
  Reduction make_reduction(const Subgroup& kernel, const std::string& suffix);
  static std::size_t side_index(Side s) { return s == Side::Left ? 0 : s == Side::Right ? 1 : 2; }

  GAction action_;
  Caps caps_;
  std::uint64_t seed_;
  std::optional<SubringRing> fixed_ring_;
  std::optional<BadPrimeProfile> bad_;
  std::optional<Subgroup> prime_, jacobson_, fixed_prime_, fixed_jacobson_, trace_;
  std::optional<NilpotencyResult> nil_, trace_nil_;
  std::optional<IdealLattice> inv_ideals_[3], fixed_ideals_[3];
  std::optional<SplittingSearch> splittings_;
  std::map<std::pair<std::size_t, std::size_t>, ProperSplittingCheck> proper_;
  std::optional<std::optional<Splitting>> averaging_;
  std::optional<UdimCertificate> udim_[3], fixed_udim_[3];
  std::unordered_map<Subgroup, std::size_t, SubgroupHash> lengths_[3], fixed_lengths_[3];
  std::unique_ptr<Reduction> by_prime_, by_jacobson_;
};

}  // namespace ringinv
