#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringinv/ideal.hpp"
#include "support.hpp"

using namespace ringinv;
using testsupport::as_vector;
using testsupport::brute_ideal;

namespace {

// M2(F2) written out from e_ij e_kl = delta_jk e_il, generators ordered
// e11, e12, e21, e22.
RingTable m2f2_by_hand() {
  RingTable t;
  t.orders = {2, 2, 2, 2};
  t.mul.assign(16, Coords(4, 0));
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) t.mul[idx(i, j) * 4 + idx(k, l)][idx(i, l)] = 1;
  return t;
}

void check_ring_axioms(const FiniteRing& r) {
  const auto n = r.order();
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      Elem xy = r.mul(x, y);
      for (std::uint64_t c = 0; c < n; ++c) {
        Elem z = static_cast<Elem>(c);
        REQUIRE(r.mul(xy, z) == r.mul(x, r.mul(y, z)));
        REQUIRE(r.mul(x, r.add(y, z)) == r.add(xy, r.mul(x, z)));
        REQUIRE(r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z)));
      }
    }
}

FiniteRing two_z8() { return FiniteRing::validate("2Z/8Z", RingTable{{4}, {{2}}, std::nullopt}); }

}  // namespace

TEST_CASE("additive group indexing is lexicographic") {
  AdditiveGroup g({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.exponent() == 6);
  CHECK(g.coords(0) == Coords{0, 0});
  CHECK(g.coords(1) == Coords{0, 1});
  CHECK(g.coords(3) == Coords{1, 0});
  CHECK(g.index(Coords{1, 2}) == 5);
  CHECK(g.add(g.index(Coords{1, 2}), g.index(Coords{1, 2})) == g.index(Coords{0, 1}));
  CHECK(g.element_order(g.index(Coords{1, 1})) == 6);
  CHECK_THROWS_AS(AdditiveGroup({1}), std::invalid_argument);
}

TEST_CASE("subgroup HNF agrees with brute-force closure") {
  std::mt19937_64 rng(7);
  const std::vector<std::vector<std::int64_t>> shapes = {{2, 2, 2}, {4, 2}, {12}, {3, 9}, {2, 4, 8}, {6, 4}};
  for (const auto& shape : shapes) {
    FiniteRing r = zero_mult_ring(AdditiveGroup(shape));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Elem> gens;
      int ng = static_cast<int>(rng() % 3);
      for (int i = 0; i < ng; ++i) gens.push_back(static_cast<Elem>(rng() % r.order()));
      Subgroup s = Subgroup::span(r.additive(), gens);
      auto brute = testsupport::additive_closure(r, {gens.begin(), gens.end()});
      REQUIRE(s.order() == brute.size());
      REQUIRE(s.elements() == as_vector(brute));
      for (std::uint64_t x = 0; x < r.order(); ++x) REQUIRE(s.contains(static_cast<Elem>(x)) == (brute.count(static_cast<Elem>(x)) > 0));
      // canonical: rebuilding from the elements in reverse order gives equal rows
      auto els = s.elements();
      std::reverse(els.begin(), els.end());
      REQUIRE(Subgroup::span(r.additive(), els) == s);
      // cyclic decomposition: generators of the stated orders span s independently
      CyclicDecomposition cd = cyclic_decomposition(s);
      REQUIRE(cd.abstract.order() == s.order());
      REQUIRE(Subgroup::span(r.additive(), cd.generators) == s);
      for (std::size_t i = 0; i < cd.generators.size(); ++i)
        REQUIRE(r.additive().element_order(cd.generators[i]) == cd.abstract.orders()[i]);
      for (std::size_t i = 0; i + 1 < cd.abstract.rank(); ++i)
        REQUIRE(cd.abstract.orders()[i + 1] % cd.abstract.orders()[i] == 0);
    }
  }
}

TEST_CASE("smith normal form leaves a divisibility chain untouched") {
  SmithForm sf = smith_normal_form({2, 0, 0, 0, 4, 0, 0, 0, 12}, 3);
  CHECK(sf.diag == std::vector<std::int64_t>{2, 4, 12});
  CHECK(sf.v == std::vector<std::int64_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  SmithForm sf2 = smith_normal_form({2, 0, 0, 3}, 2);
  CHECK(sf2.diag == std::vector<std::int64_t>{1, 6});
}

TEST_CASE("validate_ring examples") {
  SUBCASE("Z/12 is unital with identity 1") {
    FiniteRing z12 = FiniteRing::validate("Z12", RingTable{{12}, {{1}}, std::nullopt});
    REQUIRE(z12.is_unital());
    CHECK(*z12.identity() == z12.element({1}));
    CHECK(z12.order() == 12);
  }
  SUBCASE("non-associative table is rejected with a witness triple") {
    // e1 e1 = e2, e2 e1 = e2 and everything else zero: (e1 e1) e1 = e2 but
    // e1 (e1 e1) = e1 e2 = 0.
    RingTable t{{2, 2}, {{0, 1}, {0, 0}, {0, 1}, {0, 0}}, std::nullopt};
    try {
      FiniteRing::validate("bad", t);
      FAIL("expected NonAssociative");
    } catch (const RingError& e) {
      CHECK(e.kind() == RingError::Kind::NonAssociative);
      CHECK(e.witness().size() == 3);
    }
  }
  SUBCASE("ill-defined product") {
    RingTable t{{2, 4}, {{0, 0}, {0, 1}, {0, 0}, {0, 0}}, std::nullopt};  // e1 e2 = e2 has order 4
    try {
      FiniteRing::validate("bad", t);
      FAIL("expected IllDefined");
    } catch (const RingError& e) {
      CHECK(e.kind() == RingError::Kind::IllDefined);
      CHECK(e.witness() == std::vector<std::size_t>{0, 1});
    }
  }
  SUBCASE("M2(F2) from matrix-unit relations") {
    FiniteRing m = FiniteRing::validate("M2F2", m2f2_by_hand());
    CHECK(m.order() == 16);
    REQUIRE(m.is_unital());
    CHECK(m.coords(*m.identity()) == Coords{1, 0, 0, 1});
    FiniteRing built = matrix_ring(cyclic_ring(2), 2);
    CHECK(built.table().mul == m.table().mul);
    check_ring_axioms(m);
  }
  SUBCASE("wrong claimed identity") {
    RingTable t{{3}, {{1}}, Coords{2}};
    CHECK_THROWS_AS(FiniteRing::validate("bad", t), RingError);
  }
}

TEST_CASE("unitalize") {
  SUBCASE("zero-multiplication Z/2") {
    FiniteRing r = zero_mult_ring(AdditiveGroup({2}));
    FiniteRing u = unitalize(r);
    CHECK(u.order() == 4);
    REQUIRE(u.is_unital());
    CHECK(u.coords(*u.identity()) == Coords{1, 0});
  }
  SUBCASE("2Z/8Z") {
    FiniteRing r = two_z8();
    CHECK_FALSE(r.is_unital());
    FiniteRing u = unitalize(r);
    CHECK(u.order() == 16);  // e = 4, so Z/4 + Z/4
    // R keeps its indices and is a two-sided ideal of R'
    Subgroup embedded = Subgroup::span(u.additive(), testsupport::all_elements(r));
    CHECK(embedded.order() == 4);
    CHECK(is_ideal(u, embedded, Side::TwoSided));
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) CHECK(u.mul(a, b) == r.mul(a, b));
    QuotientRing q = quotient_by_ideal(u, Ideal{Side::TwoSided, embedded});
    CHECK(q.ring.additive().orders() == std::vector<std::int64_t>{4});
    CHECK(q.ring.is_unital());
    check_ring_axioms(u);
  }
  SUBCASE("already unital Z/3 is still extended") {
    FiniteRing u = unitalize(cyclic_ring(3));
    CHECK(u.order() == 9);
  }
}

TEST_CASE("unitalize contains R as an ideal with quotient Z/e (property)") {
  std::vector<FiniteRing> rings = {two_z8(), cyclic_ring(6), zero_mult_ring(AdditiveGroup({2, 4})),
                                   polynomial_quotient_ring(2, {1, 1}), matrix_ring(cyclic_ring(2), 1)};
  for (const auto& r : rings) {
    FiniteRing u = unitalize(r);
    Subgroup embedded = Subgroup::span(u.additive(), testsupport::all_elements(r));
    REQUIRE(embedded.order() == r.order());
    REQUIRE(is_ideal(u, embedded, Side::TwoSided));
    QuotientRing q = quotient_by_ideal(u, Ideal{Side::TwoSided, embedded});
    REQUIRE(q.ring.order() == static_cast<std::uint64_t>(r.additive().exponent()));
    REQUIRE(q.ring.rank() == 1);
    REQUIRE(q.ring.is_unital());
    REQUIRE(q.ring.mul(q.ring.gen(0), q.ring.gen(0)) == q.ring.gen(0));
  }
}

TEST_CASE("direct_product, matrix_ring, zero_mult_ring, group_ring") {
  FiniteRing f2 = cyclic_ring(2), f3 = cyclic_ring(3), z4 = cyclic_ring(4);
  FiniteRing f3f3 = direct_product({f3, f3});
  CHECK(f3f3.order() == 9);
  CHECK(f3f3.is_unital());
  FiniteRing f2z4 = direct_product({f2, z4});
  CHECK(f2z4.order() == 8);
  CHECK(f2z4.is_unital());
  CHECK(direct_product({z4}).table().mul == z4.table().mul);

  CHECK(matrix_ring(f2, 2).order() == 16);
  CHECK(matrix_ring(z4, 2).order() == 256);
  CHECK(matrix_ring(z4, 1).table().mul == z4.table().mul);
  CHECK_THROWS_AS(matrix_ring(two_z8(), 2), RingError);

  FiniteRing zm = zero_mult_ring(AdditiveGroup({2, 2}));
  CHECK(zm.order() == 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(zm.mul(a, b) == 0);

  std::vector<std::vector<std::size_t>> c2 = {{0, 1}, {1, 0}};
  FiniteRing f2c2 = group_ring(f2, c2);
  CHECK(f2c2.order() == 4);
  CHECK(f2c2.is_unital());
  Elem one_plus_g = f2c2.element({1, 1});
  CHECK(f2c2.mul(one_plus_g, one_plus_g) == 0);
  CHECK(group_ring(f3, c2).order() == 9);
  CHECK(group_ring(f3, {{0}}).table().mul == f3.table().mul);
  CHECK_THROWS_AS(group_ring(two_z8(), c2), RingError);
  check_ring_axioms(f2c2);
  check_ring_axioms(f2z4);
}

TEST_CASE("generated_ideal examples") {
  FiniteRing z12 = cyclic_ring(12);
  Elem six = z12.element({6});
  Ideal i = generated_ideal(z12, std::vector<Elem>{six}, Side::TwoSided);
  CHECK(i.sub.elements() == std::vector<Elem>{0, six});
  CHECK(generated_ideal(z12, std::vector<Elem>{}, Side::TwoSided).sub.is_zero());
  FiniteRing m = matrix_ring(cyclic_ring(2), 2);
  Elem e11 = m.element({1, 0, 0, 0});
  CHECK(generated_ideal(m, std::vector<Elem>{e11}, Side::TwoSided).sub.is_whole());
  // one-sided: M2(F2) e11 is the first column
  Ideal left = generated_ideal(m, std::vector<Elem>{e11}, Side::Left);
  CHECK(left.sub.order() == 4);
  CHECK(left.sub.contains(m.element({0, 0, 1, 0})));
}

TEST_CASE("generated_ideal agrees with brute force and is idempotent (property)") {
  std::mt19937_64 rng(11);
  std::vector<FiniteRing> rings = {cyclic_ring(12), matrix_ring(cyclic_ring(2), 2), two_z8(),
                                   group_ring(cyclic_ring(2), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}),
                                   unitalize(two_z8())};
  for (const auto& r : rings) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Elem> gens{static_cast<Elem>(rng() % r.order()), static_cast<Elem>(rng() % r.order())};
      for (Side side : {Side::Left, Side::Right, Side::TwoSided}) {
        Ideal i = generated_ideal(r, gens, side);
        auto brute = brute_ideal(r, gens, side != Side::Right, side != Side::Left);
        REQUIRE(i.sub.elements() == as_vector(brute));
        REQUIRE(is_ideal(r, i.sub, side));
        REQUIRE(generated_ideal(r, i.sub.generators(), side) == i);
      }
    }
  }
}

TEST_CASE("quotient_by_ideal") {
  FiniteRing z12 = cyclic_ring(12);
  Ideal six = generated_ideal(z12, std::vector<Elem>{z12.element({6})}, Side::TwoSided);
  QuotientRing q = quotient_by_ideal(z12, six);
  CHECK(q.ring.order() == 6);
  CHECK(q.ring.additive().orders() == std::vector<std::int64_t>{6});
  CHECK(q.ring.is_unital());

  QuotientRing same = quotient_by_ideal(z12, Ideal{Side::TwoSided, Subgroup(z12.additive())});
  CHECK(same.ring.order() == 12);
  QuotientRing zero = quotient_by_ideal(z12, Ideal{Side::TwoSided, Subgroup::whole(z12.additive())});
  CHECK(zero.ring.order() == 1);

  CHECK_THROWS_AS(quotient_by_ideal(z12, Ideal{Side::Left, six.sub}), RingError);
}

TEST_CASE("quotient projection is a surjective ring map (property)") {
  std::mt19937_64 rng(3);
  std::vector<FiniteRing> rings = {cyclic_ring(12), matrix_ring(cyclic_ring(2), 2), unitalize(two_z8()),
                                   direct_product({cyclic_ring(4), cyclic_ring(6)}),
                                   group_ring(cyclic_ring(3), {{0, 1}, {1, 0}})};
  for (const auto& r : rings) {
    for (int trial = 0; trial < 10; ++trial) {
      Ideal i = generated_ideal(r, std::vector<Elem>{static_cast<Elem>(rng() % r.order())}, Side::TwoSided);
      QuotientRing q = quotient_by_ideal(r, i);
      REQUIRE(q.ring.order() * i.sub.order() == r.order());
      std::vector<bool> hit(q.ring.order(), false);
      for (std::uint64_t a = 0; a < r.order(); ++a) {
        Elem x = static_cast<Elem>(a);
        hit[q.projection[x]] = true;
        REQUIRE((q.projection[x] == 0) == i.sub.contains(x));
        for (std::uint64_t b = 0; b < r.order(); ++b) {
          Elem y = static_cast<Elem>(b);
          REQUIRE(q.projection[r.add(x, y)] == q.ring.add(q.projection[x], q.projection[y]));
          REQUIRE(q.projection[r.mul(x, y)] == q.ring.mul(q.projection[x], q.projection[y]));
        }
      }
      REQUIRE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      for (std::uint64_t c = 0; c < q.ring.order(); ++c) REQUIRE(q.projection[q.lift[c]] == c);
    }
  }
}

TEST_CASE("subring_ring presents a subring faithfully") {
  FiniteRing m = matrix_ring(cyclic_ring(2), 2);
  // upper triangular matrices
  Subgroup upper = Subgroup::span(m.additive(), std::vector<Elem>{m.element({1, 0, 0, 0}), m.element({0, 1, 0, 0}),
                                                                  m.element({0, 0, 0, 1})});
  SubringRing s = subring_ring(m, upper, "T2");
  CHECK(s.ring.order() == 8);
  CHECK(s.ring.is_unital());
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      REQUIRE(s.to_parent(s.ring.mul(a, b)) == m.mul(s.to_parent(a), s.to_parent(b)));
      REQUIRE(s.to_parent(s.ring.add(a, b)) == m.add(s.to_parent(a), s.to_parent(b)));
    }
  check_ring_axioms(s.ring);
  Subgroup not_closed = Subgroup::span(m.additive(), std::vector<Elem>{m.element({0, 1, 0, 0}), m.element({0, 0, 1, 0})});
  CHECK_THROWS(subring_ring(m, not_closed, "x"));
}

TEST_CASE("all_ideals on small rings matches brute-force enumeration") {
  std::vector<FiniteRing> rings = {cyclic_ring(12), matrix_ring(cyclic_ring(2), 2), two_z8(),
                                   zero_mult_ring(AdditiveGroup({2, 2}))};
  for (const auto& r : rings) {
    for (Side side : {Side::Left, Side::Right, Side::TwoSided}) {
      IdealLattice lat = all_ideals(r, side, 100000);
      REQUIRE(lat.exhaustive);
      // brute force: every subgroup that is an ideal, found as closure of each subset of size <= 2
      std::set<std::vector<Elem>> brute;
      for (std::uint64_t a = 0; a < r.order(); ++a)
        for (std::uint64_t b = a; b < r.order(); ++b) {
          auto s = testsupport::additive_closure(r, {static_cast<Elem>(a), static_cast<Elem>(b)});
          Subgroup sg = Subgroup::span(r.additive(), as_vector(s));
          if (is_ideal(r, sg, side)) brute.insert(as_vector(s));
        }
      std::set<std::vector<Elem>> got;
      for (const auto& i : lat.ideals) got.insert(i.elements());
      // every 2-generated ideal subgroup must be present
      for (const auto& b : brute) REQUIRE(got.count(b) == 1);
      for (const auto& i : lat.ideals) REQUIRE(is_ideal(r, i, side));
    }
  }
}
