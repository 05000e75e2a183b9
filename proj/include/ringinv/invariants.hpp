#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ringinv/groups.hpp"
#include "ringinv/radicals.hpp"

namespace ringinv {

class InvariantError : public std::runtime_error {
 public:
  enum class Kind { NotInFixedRing, NotInvertible, NotNormal };
  InvariantError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A group acting on its ring together with the fixed ring R^G.
struct GAction {
  AutomorphismGroup group;
  Subgroup fixed;

  static GAction of(AutomorphismGroup g);
  const FiniteRing& ring() const { return group.ring(); }
  std::size_t n() const { return group.order(); }
};

Subgroup fixed_ring(const AutomorphismGroup& g);

/// t(r) = sum of g(r) over g in G.
Elem trace(const AutomorphismGroup& g, Elem r);
/// Additive span of t(x) for x in X.
Subgroup trace_image(const AutomorphismGroup& g, std::span<const Elem> x);
Subgroup trace_image(const AutomorphismGroup& g, const Subgroup& x);

/// t_{G/N}: R^N -> R^G over the least coset representatives. Construction
/// checks normality and that every coset induces one map on R^N.
class RelativeTrace {
 public:
  RelativeTrace(const AutomorphismGroup& g, SubgroupIndices n);

  Elem operator()(Elem r) const;
  Subgroup image(const Subgroup& x) const;
  const Subgroup& domain() const { return domain_; }
  const CosetDecomposition& cosets() const { return cosets_; }

 private:
  std::vector<RingAutomorphism> reps_;
  FiniteRing ring_;
  CosetDecomposition cosets_;
  Subgroup domain_;
};

/// tor_n(R): elements killed by some power of n.
Ideal torsion_ideal(const FiniteRing& r, std::int64_t n);
/// No nonzero element x of s with n x = 0.
bool is_torsion_free(const Subgroup& s, std::int64_t n);

struct BadPrime {
  std::int64_t p = 0;
  Subgroup torsion;
  std::optional<SubgroupIndices> complement;      // N(p)
  std::optional<Subgroup> complement_fixed;       // R^N(p)
  std::optional<Subgroup> relative_trace_image;   // t_G(p)(R^N(p))
  std::optional<std::size_t> d;                   // least d with image^d = 0
  bool never_nilpotent = false;                   // powers stabilized above 0
  std::size_t d_cap = 16;
};
struct BadPrimeProfile {
  std::vector<BadPrime> primes;
  bool empty() const { return primes.empty(); }
  std::vector<std::int64_t> list() const;
};
BadPrimeProfile bad_primes(const GAction& a, std::size_t d_cap = 16);

/// J^e: the sided ideal of R generated by J (J + RJ, J + JR or J + RJ + JR + RJR).
Subgroup extend(const FiniteRing& r, const Subgroup& j, Side side);
/// I^r = I cap R^G.
Subgroup restrict(const GAction& a, const Subgroup& i);

/// A decomposition R = R^G + B of R^G-bimodules with its projection e onto R^G.
struct Splitting {
  Subgroup complement;
  std::vector<Elem> projection;
  bool g_invariant = false;

  Elem e(Elem r) const { return projection[r]; }
  /// e(S) for a subgroup S.
  Subgroup image(const Subgroup& s) const;
};

/// Builds the splitting for a candidate complement, or nullopt when B is not
/// an R^G-bimodule complement of R^G.
std::optional<Splitting> splitting_from_complement(const GAction& a, const Subgroup& b);

/// |G| acts invertibly on R (gcd(|G|, exponent) = 1).
bool order_invertible(const GAction& a);
/// e = |G|^-1 sum g with B = (1 - e)(R). Throws NotInvertible.
Splitting averaging_idempotent(const GAction& a);

struct SplittingSearch {
  std::vector<Splitting> found;  // G-invariant complements first, then the rest
  bool exhaustive = true;
};
/// Depth-first search over R^G-bimodule complements of R^G.
SplittingSearch splitting_search(const GAction& a, std::size_t max_found = 64, std::size_t node_budget = 20000);

/// G-invariant sided ideals: exhaustive when |R| <= order_cap (and at most
/// count_cap ideals), otherwise generated from the G-orbits of `samples`
/// random elements.
IdealLattice invariant_ideals(const GAction& a, Side side, std::size_t order_cap = 256, std::size_t count_cap = 4096,
                              std::uint64_t seed = 0, std::size_t samples = 64);

struct ProperSplittingCheck {
  bool proper = true;             // e(I) in I cap R^G for every scanned I
  bool reverse = true;            // I cap R^G in e(I) for every scanned I
  bool equality = true;           // e(I) = I cap R^G for every scanned I
  std::optional<Subgroup> witness;
  bool exhaustive = true;
  std::size_t checked = 0;
};
ProperSplittingCheck is_proper_splitting(const GAction& a, const Splitting& s, const IdealLattice& invariant);

struct CentralizerNormalizer {
  Subgroup centralizer;
  std::vector<Elem> normalizer;
  std::vector<Elem> centralizer_units;
  std::vector<Elem> normalizer_units;
};
CentralizerNormalizer centralizer_normalizer(const FiniteRing& b, const Subgroup& a);

struct NondegenerateTrace {
  bool fixed_semiprime = false;
  bool traces_nonzero = true;
  std::optional<Subgroup> witness;
  Side witness_side = Side::Left;
  bool exhaustive = true;
  bool holds() const { return fixed_semiprime && traces_nonzero; }
};
/// The witness is the largest invariant ideal (left ideals first) with zero trace.
NondegenerateTrace nondegenerate_trace_check(const GAction& a, const IdealLattice& left, const IdealLattice& right);
NondegenerateTrace nondegenerate_trace_check(const GAction& a);

/// R^G as a ring of its own.
SubringRing fixed_subring(const GAction& a);

}  // namespace ringinv
