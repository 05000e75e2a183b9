#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ringinv/ring.hpp"

namespace ringinv {

/// A sided ideal: an additive subgroup closed under multiplication by ring
/// elements on the given side(s).
struct Ideal {
  Side side = Side::TwoSided;
  Subgroup sub;

  bool operator==(const Ideal& o) const { return side == o.side && sub == o.sub; }
};

/// The additive generators e_1, ..., e_k.
std::vector<Elem> ring_generators(const FiniteRing& r);

/// Closes `start` under x -> a x (left), x -> x a (right) or both for a in
/// `acting` (generators of a multiplicatively closed subgroup). Since `start`
/// is kept, the result is the submodule generated in the unitalized sense.
Subgroup close_under(const FiniteRing& r, Subgroup start, const std::vector<Elem>& acting, Side side);

/// Smallest sided ideal containing `gens` (Z gens + R gens + gens R + R gens R).
Ideal generated_ideal(const FiniteRing& r, std::span<const Elem> gens, Side side);
Ideal generated_ideal(const FiniteRing& r, const Subgroup& gens, Side side);

bool is_ideal(const FiniteRing& r, const Subgroup& s, Side side);
bool is_subring(const FiniteRing& r, const Subgroup& s);
/// Additive span of all products a b with a in A, b in B.
Subgroup product(const FiniteRing& r, const Subgroup& a, const Subgroup& b);
/// A^k (k >= 1).
Subgroup power(const FiniteRing& r, const Subgroup& a, std::size_t k);

/// The subgroup of r whose elements satisfy `pred`; pred must cut out a subgroup.
Subgroup subgroup_where(const FiniteRing& r, const std::function<bool(Elem)>& pred);

/// Result of enumerating a family of sided ideals.
struct IdealLattice {
  std::vector<Subgroup> ideals;  // sorted by (order, canonical rows)
  bool exhaustive = true;
};

/// All sided ideals stable under `closure_of` (which maps an element to the
/// smallest admissible ideal containing it, e.g. the ideal generated by its
/// G-orbit). Enumerates joins of the principal ones breadth-first; stops with
/// exhaustive=false after `cap` ideals.
IdealLattice enumerate_ideals(const FiniteRing& r, const std::function<Subgroup(Elem)>& closure_of,
                              std::size_t cap);
/// All sided ideals of r (no group condition).
IdealLattice all_ideals(const FiniteRing& r, Side side, std::size_t cap);

/// A subring presented as a ring in its own right.
struct SubringRing {
  FiniteRing ring;
  Subgroup carrier;          // inside the parent
  std::vector<Elem> embed;   // sub element -> parent element
  std::vector<std::int64_t> index_in_parent;  // parent element -> sub element or -1

  Elem to_parent(Elem x) const { return embed[x]; }
  std::optional<Elem> from_parent(Elem x) const {
    auto v = index_in_parent[x];
    return v < 0 ? std::nullopt : std::optional<Elem>(static_cast<Elem>(v));
  }
  Subgroup to_parent(const Subgroup& s) const;
  /// s intersected with the carrier, pulled back.
  Subgroup from_parent(const Subgroup& s) const;
};
SubringRing subring_ring(const FiniteRing& r, const Subgroup& s, std::string name);

/// R/I with the projection R -> R/I.
struct QuotientRing {
  FiniteRing ring;
  Subgroup kernel;
  std::vector<Elem> projection;  // parent element -> quotient element
  std::vector<Elem> lift;        // quotient element -> least representative

  Subgroup image(const Subgroup& s) const;
  /// Full preimage of a subgroup of the quotient.
  Subgroup preimage(const Subgroup& s, const FiniteRing& parent) const;
};
QuotientRing quotient_by_ideal(const FiniteRing& r, const Ideal& i, std::string name = "");

}  // namespace ringinv
