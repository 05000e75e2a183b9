#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringinv/additive.hpp"

namespace ringinv {

enum class Side { Left, Right, TwoSided };
const char* to_string(Side s);

/// Raised by ring validation and the ring constructors.
class RingError : public std::runtime_error {
 public:
  enum class Kind { BadDimensions, IllDefined, NonAssociative, NotIdentity, NotUnital, WrongSide };
  RingError(Kind kind, std::string what, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::move(what)), kind_(kind), witness_(std::move(witness)) {}
  Kind kind() const { return kind_; }
  /// Generator indices (0-based) involved in the failure.
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

/// Raw structure constants: products e_i e_j as coordinate vectors, row-major
/// over (i, j), plus an optional claimed identity.
struct RingTable {
  std::vector<std::int64_t> orders;
  std::vector<Coords> mul;
  std::optional<Coords> unit;
};

/// A finite ring (not necessarily unital) given by the additive group
/// Z/d1 + ... + Z/dk and bilinear products of the generators. Immutable and
/// cheap to copy; copies share the structure data and the product cache.
class FiniteRing {
 public:
  FiniteRing();

  /// Checks well-definedness (d_i (e_i e_j) = 0 = d_j (e_i e_j)), associativity
  /// on generator triples and the claimed identity; detects an identity when
  /// none is claimed.
  static FiniteRing validate(std::string name, const RingTable& table);

  const std::string& name() const;
  FiniteRing renamed(std::string name) const;
  const AdditiveGroup& additive() const;
  std::uint64_t order() const { return additive().order(); }
  std::size_t rank() const { return additive().rank(); }

  Elem gen(std::size_t i) const { return additive().generator(i); }
  Elem add(Elem a, Elem b) const { return additive().add(a, b); }
  Elem sub(Elem a, Elem b) const { return additive().sub(a, b); }
  Elem neg(Elem a) const { return additive().neg(a); }
  Elem scale(std::int64_t n, Elem a) const { return additive().scale(n, a); }
  Elem mul(Elem a, Elem b) const;
  Coords mul_coords(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;
  Elem element(std::span<const std::int64_t> c) const { return additive().index(c); }
  Elem element(std::initializer_list<std::int64_t> c) const {
    return additive().index(std::span<const std::int64_t>(c.begin(), c.size()));
  }
  Coords coords(Elem x) const { return additive().coords(x); }

  const std::optional<Elem>& identity() const;
  bool is_unital() const { return identity().has_value(); }

  /// Structure constants e_i e_j.
  Elem generator_product(std::size_t i, std::size_t j) const;
  RingTable table() const;

 private:
  struct Data;
  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Constructors ---------------------------------------------------------------

FiniteRing cyclic_ring(std::int64_t n);
FiniteRing zero_mult_ring(const AdditiveGroup& a, std::string name = "");
/// Z/n[x]/(f) for a monic f given by its non-leading coefficients
/// f = x^m + c_{m-1} x^{m-1} + ... + c_0, coefficients listed from c_0.
FiniteRing polynomial_quotient_ring(std::int64_t n, const std::vector<std::int64_t>& lower_coeffs,
                                    std::string name = "");
FiniteRing direct_product(const std::vector<FiniteRing>& rings, std::string name = "");
/// Element of a direct product from one element per factor.
Elem product_element(const FiniteRing& product, const std::vector<FiniteRing>& factors,
                     const std::vector<Elem>& parts);
FiniteRing matrix_ring(const FiniteRing& r, std::size_t n, std::string name = "");
/// Matrix over r (row-major n x n entries) as an element of matrix_ring(r, n).
Elem matrix_element(const FiniteRing& mat, const FiniteRing& r, std::size_t n, const std::vector<Elem>& entries);
/// Group ring r[H]; `cayley[a][b]` is the index of a*b in H.
FiniteRing group_ring(const FiniteRing& r, const std::vector<std::vector<std::size_t>>& cayley,
                      std::string name = "");
/// Z/e + R with (m,x)(n,y) = (mn, my + nx + xy), e the additive exponent of R.
/// R sits inside as the elements with first coordinate 0 and keeps its indices.
FiniteRing unitalize(const FiniteRing& r);

}  // namespace ringinv
