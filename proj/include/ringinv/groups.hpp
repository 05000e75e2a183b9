#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ringinv/ideal.hpp"

namespace ringinv {

using BigInt = boost::multiprecision::cpp_int;

class GroupError : public std::runtime_error {
 public:
  enum class Kind { NotAutomorphism, GroupTooLarge, NotDividing, NotNormal, NotFixedRing, NotPGroup, NotPModule };
  GroupError(Kind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A ring automorphism, stored by the images of the additive generators and
/// the induced permutation of all elements.
class RingAutomorphism {
 public:
  RingAutomorphism() = default;
  /// Validates order compatibility, multiplicativity on generator pairs and
  /// bijectivity.
  static RingAutomorphism make(const FiniteRing& r, std::vector<Elem> images, std::string name = "");
  static RingAutomorphism identity(const FiniteRing& r);
  /// Images are trusted; used when the map is known to be an automorphism.
  static RingAutomorphism from_images_unchecked(const FiniteRing& r, std::vector<Elem> images, std::string name = "");

  Elem operator()(Elem x) const { return perm_[x]; }
  const std::vector<Elem>& images() const { return images_; }
  const std::vector<Elem>& permutation() const { return perm_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  bool is_identity() const;

  /// this after inner: x -> this(inner(x)).
  RingAutomorphism after(const RingAutomorphism& inner, const FiniteRing& r) const;

  bool operator==(const RingAutomorphism& o) const { return images_ == o.images_; }
  bool operator<(const RingAutomorphism& o) const { return images_ < o.images_; }

 private:
  std::vector<Elem> images_;
  std::vector<Elem> perm_;
  std::string name_;
};

/// Indices into an AutomorphismGroup's element list, sorted ascending.
using SubgroupIndices = std::vector<std::size_t>;

/// A finite group of ring automorphisms stored as an explicit element list:
/// identity first, the rest sorted by image vector.
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;
  /// Breadth-first closure of the generators. Throws GroupTooLarge when the
  /// closure exceeds `cap` elements.
  static AutomorphismGroup close(const FiniteRing& r, const std::vector<RingAutomorphism>& gens,
                                 std::string name = "", std::size_t cap = 720);
  static AutomorphismGroup trivial(const FiniteRing& r, std::string name = "trivial");

  const FiniteRing& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t order() const { return elements_.size(); }
  const RingAutomorphism& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<RingAutomorphism>& elements() const { return elements_; }
  /// The generators as given (deduplicated, identity dropped).
  const std::vector<RingAutomorphism>& generators() const { return generators_; }

  /// Index of g_i after g_j.
  std::size_t compose(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t element_order(std::size_t i) const;
  std::optional<std::size_t> find(const RingAutomorphism& a) const;

  SubgroupIndices all_indices() const;
  bool is_subgroup(const SubgroupIndices& h) const;
  bool is_normal(const SubgroupIndices& h) const;

 private:
  FiniteRing ring_;
  std::string name_;
  std::vector<RingAutomorphism> elements_;
  std::vector<RingAutomorphism> generators_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

/// Left cosets gN with the least element index as representative.
struct CosetDecomposition {
  std::vector<std::size_t> representatives;  // one per coset, ascending
  std::vector<std::size_t> coset_of;         // group index -> coset number
};
CosetDecomposition cosets(const AutomorphismGroup& g, const SubgroupIndices& n);

/// The p-normal complement N(p): the elements of order prime to p, when they
/// form a normal subgroup of order |G|/p^s. Throws NotDividing if p does not
/// divide |G|.
std::optional<SubgroupIndices> p_normal_complement(const AutomorphismGroup& g, std::int64_t p);

/// Fixed subgroup of the elements listed in `h`.
Subgroup fixed_subgroup(const AutomorphismGroup& g, const SubgroupIndices& h);

/// Group induced on a subring or quotient: `images[i]` is the index, in
/// `group`, of the map induced by element i of the source group.
struct InducedGroup {
  AutomorphismGroup group;
  std::vector<std::size_t> images;
};
/// Restriction of G to a G-stable subring (throws if not stable).
InducedGroup restrict_to_subring(const AutomorphismGroup& g, const SubringRing& s);
/// Action induced on R/I for a G-stable two-sided ideal I.
InducedGroup induce_on_quotient(const AutomorphismGroup& g, const QuotientRing& q);

/// The action of G/N on S = R^N.
struct QuotientAction {
  InducedGroup induced;          // on S, from the coset representatives
  CosetDecomposition cosets;     // of N in G
  std::size_t quotient_order = 0;
};
QuotientAction quotient_action(const AutomorphismGroup& g, const SubgroupIndices& n, const SubringRing& s);

/// prod_{i=1}^{n} (C(n, i) + 1).
BigInt h_constant(std::uint64_t n);

/// A nonzero element of V fixed by every element of the p-group P, or nullopt
/// when V = 0. V must be a P-stable subgroup whose order is a power of the same
/// prime p dividing |P|; P must be nontrivial.
std::optional<Elem> p_group_fixed_point(const AutomorphismGroup& p_group, const Subgroup& v);

/// Enumerates automorphisms of r by backtracking over generator images, stopping
/// after `max_found` automorphisms or `node_budget` search nodes.
struct AutomorphismSearch {
  std::vector<RingAutomorphism> found;
  bool complete = true;
};
AutomorphismSearch search_automorphisms(const FiniteRing& r, std::size_t max_found, std::size_t node_budget);

/// Inner automorphism x -> u x u^-1 for a unit u.
RingAutomorphism inner_automorphism(const FiniteRing& r, Elem unit);
std::optional<Elem> unit_inverse(const FiniteRing& r, Elem u);

std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace ringinv
