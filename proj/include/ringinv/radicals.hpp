#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringinv/ideal.hpp"

namespace ringinv {

/// Nilpotency of a subgroup under the ring product.
struct NilpotencyResult {
  std::optional<std::size_t> index;  // least k with S^k = 0
  bool stabilized = false;           // S^k = S^(k+1) != 0 was reached
  std::size_t iterations = 0;
  /// True when the answer is exact: either nilpotent or provably never.
  bool decided() const { return index.has_value() || stabilized; }
};
NilpotencyResult nilpotency_index(const FiniteRing& r, const Subgroup& s, std::size_t cap = 64);
NilpotencyResult nilpotency_index(const FiniteRing& r, std::size_t cap = 64);

/// Largest nilpotent ideal: the elements generating a nilpotent two-sided ideal.
Subgroup prime_radical(const FiniteRing& r);
/// Elements x whose generated left ideal consists of left quasi-regular
/// elements (z + y + zy = 0 solvable for every y).
Subgroup jacobson_radical(const FiniteRing& r);
bool is_semiprime(const FiniteRing& r);
bool is_semisimple_artinian(const FiniteRing& r);

/// A direct sum of nonzero sided ideals of maximal size.
struct UdimCertificate {
  std::size_t value = 0;
  std::vector<Subgroup> witness;
  bool exhaustive = true;
};
/// Computed from the minimal sided ideals (the socle); with more than `cap`
/// elements only the first `cap` elements generate candidates and the result
/// is a lower bound marked not exhaustive.
UdimCertificate uniform_dimension(const FiniteRing& r, Side side, std::size_t cap = 256);
/// Re-checks that the witness ideals are nonzero, sided ideals and independent.
bool verify_udim(const FiniteRing& r, Side side, const UdimCertificate& c);

/// Regular elements and the finite quotient-ring status.
struct RegularElements {
  std::vector<Elem> regular;
  std::vector<Elem> units;
  bool regular_are_units = false;  // only meaningful for unital rings
  std::string quotient;            // "Q(R) = R" or "degenerate"
};
RegularElements regular_elements_quotient(const FiniteRing& r);

Ideal left_annihilator(const FiniteRing& r, std::span<const Elem> x);
Ideal right_annihilator(const FiniteRing& r, std::span<const Elem> x);

/// Length of top/bottom as a module over the ring additively generated by
/// `acting` (elements of r), acting on the given side. bottom must be a
/// submodule of top.
std::size_t module_length(const FiniteRing& r, const Subgroup& top, const Subgroup& bottom,
                          const std::vector<Elem>& acting, Side side);
/// A composition series bottom = M0 < M1 < ... < Mn = top, each step the least
/// minimal submodule above the previous one.
std::vector<Subgroup> composition_series(const FiniteRing& r, const Subgroup& top, const Subgroup& bottom,
                                         const std::vector<Elem>& acting, Side side);

}  // namespace ringinv
