#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ringinv {

/// Element handle: position of the coordinate vector in the lexicographic
/// enumeration of the additive group (first coordinate most significant).
/// Index order and lexicographic order on coordinates coincide.
using Elem = std::uint32_t;
using Coords = std::vector<std::int64_t>;

/// The additive group Z/d1 + ... + Z/dk. Rank 0 is the trivial group.
class AdditiveGroup {
 public:
  AdditiveGroup() = default;
  explicit AdditiveGroup(std::vector<std::int64_t> orders);

  std::size_t rank() const { return orders_.size(); }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::int64_t order_of_component(std::size_t i) const { return orders_[i]; }
  std::uint64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }

  Coords coords(Elem x) const;
  void coords_into(Elem x, std::span<std::int64_t> out) const;
  /// Reduces every coordinate into [0, d_i) before encoding.
  Elem index(std::span<const std::int64_t> c) const;
  Elem generator(std::size_t i) const { return static_cast<Elem>(strides_[i]); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem scale(std::int64_t n, Elem a) const;
  /// Additive order of an element.
  std::int64_t element_order(Elem a) const;

  bool operator==(const AdditiveGroup& o) const { return orders_ == o.orders_; }

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

/// Additive subgroup of an AdditiveGroup, stored as the Hermite normal form of
/// its preimage lattice in Z^k (which always contains d1 Z + ... + dk Z).
/// The HNF is unique, so equality of subgroups is equality of rows.
class Subgroup {
 public:
  Subgroup() = default;
  /// The zero subgroup.
  explicit Subgroup(const AdditiveGroup& g);
  static Subgroup whole(const AdditiveGroup& g);
  static Subgroup span(const AdditiveGroup& g, std::span<const Elem> gens);

  const AdditiveGroup& group() const { return group_; }

  /// Adds a generator. Returns true when the subgroup grew.
  bool insert(Elem x);
  bool insert_coords(Coords v);
  /// Adds every generator of `other`.
  bool absorb(const Subgroup& other);

  bool contains(Elem x) const;
  bool contains_coords(std::span<const std::int64_t> v) const;
  bool contains(const Subgroup& other) const;
  std::uint64_t order() const { return order_; }
  bool is_zero() const { return order_ == 1; }
  bool is_whole() const { return order_ == group_.order(); }

  /// Canonical generators: the HNF rows that are not multiples of d_i e_i.
  std::vector<Elem> generators() const;
  /// All elements, sorted ascending.
  std::vector<Elem> elements() const;
  void for_each(const std::function<void(Elem)>& f) const;

  /// Row i of the HNF; its pivot is entry i.
  std::span<const std::int64_t> row(std::size_t i) const {
    return {rows_.data() + i * group_.rank(), group_.rank()};
  }
  std::int64_t pivot(std::size_t i) const { return rows_[i * group_.rank() + i]; }

  bool operator==(const Subgroup& o) const { return group_ == o.group_ && rows_ == o.rows_; }
  bool operator<(const Subgroup& o) const { return rows_ < o.rows_; }
  std::size_t hash() const;

 private:
  void reduce();
  AdditiveGroup group_;
  std::vector<std::int64_t> rows_;  // k x k, upper triangular
  std::uint64_t order_ = 1;
};

Subgroup sum(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return s.hash(); }
};

/// Smith normal form U A V = diag(s) of a square nonsingular integer matrix
/// (row-major). Only the column transform V and its inverse are tracked.
struct SmithForm {
  std::vector<std::int64_t> diag;
  std::vector<std::int64_t> v;
  std::vector<std::int64_t> v_inv;
};
SmithForm smith_normal_form(std::vector<std::int64_t> a, std::size_t n);

/// A subgroup presented as an abstract group Z/s1 + ... + Z/sm (s1 | s2 | ...),
/// together with the images of the new cyclic generators.
struct CyclicDecomposition {
  AdditiveGroup abstract;
  std::vector<Elem> generators;
};
CyclicDecomposition cyclic_decomposition(const Subgroup& s);

/// Z^k / L for the lattice of `s`: the quotient group and the projection
/// coordinates v -> (v V) mod s_i, plus lifts of the quotient generators.
struct QuotientGroup {
  AdditiveGroup abstract;
  std::vector<std::int64_t> projection;  // k x m, columns reduced mod s_j
  std::vector<Elem> lifts;               // one per quotient generator
};
QuotientGroup quotient_group(const Subgroup& s);
Coords project_coords(const QuotientGroup& q, std::span<const std::int64_t> v);

}  // namespace ringinv
