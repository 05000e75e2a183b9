#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringinv/radicals.hpp"
#include "support.hpp"

using namespace ringinv;
using testsupport::as_vector;
using testsupport::brute_ideal;
using testsupport::brute_nilpotency;

namespace {

FiniteRing two_z8() { return FiniteRing::validate("2Z/8Z", RingTable{{4}, {{2}}, std::nullopt}); }

std::vector<std::vector<std::size_t>> cyclic_cayley(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

FiniteRing upper_triangular_f2() {
  auto f2 = cyclic_ring(2);
  auto m = matrix_ring(f2, 2);
  std::vector<Elem> gens{matrix_element(m, f2, 2, {1, 0, 0, 0}), matrix_element(m, f2, 2, {0, 1, 0, 0}),
                         matrix_element(m, f2, 2, {0, 0, 0, 1})};
  return subring_ring(m, Subgroup::span(m.additive(), gens), "T2(F2)").ring;
}

std::vector<FiniteRing> family() {
  auto f2 = cyclic_ring(2), f3 = cyclic_ring(3), z4 = cyclic_ring(4);
  std::vector<FiniteRing> out{cyclic_ring(12),
                              cyclic_ring(8),
                              f3,
                              two_z8(),
                              direct_product({f3, f3}),
                              direct_product({f2, z4}),
                              zero_mult_ring(AdditiveGroup({2, 2})),
                              zero_mult_ring(AdditiveGroup({2, 4})),
                              matrix_ring(f2, 2),
                              group_ring(f2, cyclic_cayley(2)),
                              group_ring(f3, cyclic_cayley(2)),
                              group_ring(f2, cyclic_cayley(3)),
                              polynomial_quotient_ring(2, {0, 0, 0}),  // F2[x]/(x^3)
                              polynomial_quotient_ring(4, {2, 0}),     // Z/4[x]/(x^2 + 2)
                              polynomial_quotient_ring(2, {1, 1}),     // F4
                              upper_triangular_f2(),
                              unitalize(two_z8()),
                              unitalize(zero_mult_ring(AdditiveGroup({3})))};
  return out;
}

std::set<Elem> brute_prime_radical(const FiniteRing& r) {
  std::set<Elem> rad;
  for (std::uint64_t x = 0; x < r.order(); ++x) {
    auto i = brute_ideal(r, {static_cast<Elem>(x)}, true, true);
    if (brute_nilpotency(r, i, 40) != 0) rad.insert(static_cast<Elem>(x));
  }
  return rad;
}

}  // namespace

TEST_CASE("nilpotency index examples") {
  CHECK(nilpotency_index(zero_mult_ring(AdditiveGroup({2, 2}))).index == std::optional<std::size_t>(2));
  CHECK(nilpotency_index(two_z8()).index == std::optional<std::size_t>(3));
  auto f3 = nilpotency_index(cyclic_ring(3));
  CHECK_FALSE(f3.index);
  CHECK(f3.stabilized);
  CHECK(nilpotency_index(polynomial_quotient_ring(2, {0, 0, 0}), Subgroup::span(AdditiveGroup({2, 2, 2}),
                                                                              std::vector<Elem>{2, 1}))
            .index == std::optional<std::size_t>(3));
}

TEST_CASE("radical examples") {
  auto z12 = cyclic_ring(12);
  auto expect = Subgroup::span(z12.additive(), std::vector<Elem>{6});
  CHECK(prime_radical(z12) == expect);
  CHECK(jacobson_radical(z12) == expect);
  auto m = matrix_ring(cyclic_ring(2), 2);
  CHECK(prime_radical(m).is_zero());
  CHECK(is_semiprime(m));
  CHECK(is_semisimple_artinian(m));
  auto zm = zero_mult_ring(AdditiveGroup({2, 2}));
  CHECK(prime_radical(zm).is_whole());
  CHECK(jacobson_radical(zm).is_whole());
  auto f2c2 = group_ring(cyclic_ring(2), cyclic_cayley(2));
  auto j = jacobson_radical(f2c2);
  CHECK(j.order() == 2);
  CHECK(j.contains(f2c2.element({1, 1})));
  CHECK_FALSE(is_semiprime(f2c2));
  CHECK(jacobson_radical(direct_product({cyclic_ring(3), cyclic_ring(3)})).is_zero());
  CHECK_FALSE(is_semiprime(two_z8()));
  CHECK_FALSE(is_semisimple_artinian(two_z8()));
}

TEST_CASE("property: the two radical algorithms agree with each other and the oracle") {
  for (const auto& r : family()) {
    CAPTURE(r.name());
    auto n = prime_radical(r);
    auto j = jacobson_radical(r);
    CHECK(n == j);
    CHECK(as_vector(brute_prime_radical(r)) == n.elements());
    CHECK(is_ideal(r, n, Side::TwoSided));
    CHECK(nilpotency_index(r, n).index.has_value());
    auto q = quotient_by_ideal(r, Ideal{Side::TwoSided, n});
    CHECK(is_semiprime(q.ring));
  }
}

TEST_CASE("uniform dimension") {
  auto f3 = cyclic_ring(3);
  auto p = direct_product({f3, f3});
  auto u = uniform_dimension(p, Side::Left);
  CHECK(u.value == 2);
  CHECK(u.exhaustive);
  CHECK(verify_udim(p, Side::Left, u));
  auto m = matrix_ring(cyclic_ring(2), 2);
  CHECK(uniform_dimension(m, Side::Left).value == 2);
  CHECK(uniform_dimension(m, Side::Right).value == 2);
  CHECK(uniform_dimension(polynomial_quotient_ring(2, {1, 1}), Side::Left).value == 1);
  CHECK(uniform_dimension(f3, Side::Right).value == 1);
  CHECK(uniform_dimension(cyclic_ring(12), Side::Left).value == 2);
  CHECK(uniform_dimension(zero_mult_ring(AdditiveGroup({2, 2, 2})), Side::Left).value == 3);
  auto capped = uniform_dimension(matrix_ring(cyclic_ring(3), 2), Side::Left, 10);
  CHECK_FALSE(capped.exhaustive);
  CHECK(verify_udim(matrix_ring(cyclic_ring(3), 2), Side::Left, capped));
}

TEST_CASE("property: udim witnesses verify and bound the independent families of principal ideals") {
  for (const auto& r : family()) {
    for (Side side : {Side::Left, Side::Right}) {
      CAPTURE(r.name());
      auto u = uniform_dimension(r, side);
      CHECK(verify_udim(r, side, u));
      // greedy over all principal ideals in reverse order never beats the value
      Subgroup total(r.additive());
      std::size_t count = 0;
      for (std::uint64_t x = r.order(); x-- > 1;) {
        auto p = generated_ideal(r, std::vector<Elem>{static_cast<Elem>(x)}, side).sub;
        if (intersect(total, p).is_zero()) {
          total = sum(total, p);
          ++count;
        }
      }
      CHECK(count <= u.value);
    }
  }
}

TEST_CASE("regular elements") {
  auto z12 = cyclic_ring(12);
  auto reg = regular_elements_quotient(z12);
  CHECK(reg.regular == std::vector<Elem>{1, 5, 7, 11});
  CHECK(reg.regular_are_units);
  auto m = matrix_ring(cyclic_ring(2), 2);
  auto rm = regular_elements_quotient(m);
  CHECK(rm.regular.size() == 6);
  CHECK(rm.regular_are_units);
  CHECK(rm.quotient == "Q(R) = R");
  auto zm = regular_elements_quotient(zero_mult_ring(AdditiveGroup({2})));
  CHECK(zm.regular.empty());
  CHECK(zm.quotient == "degenerate");
  for (const auto& r : family())
    if (r.is_unital()) CHECK(regular_elements_quotient(r).regular_are_units);
}

TEST_CASE("annihilators") {
  auto z12 = cyclic_ring(12);
  std::vector<Elem> zero{0}, six{6};
  CHECK(left_annihilator(z12, zero).sub.is_whole());
  CHECK(left_annihilator(z12, six).sub.elements() == std::vector<Elem>{0, 2, 4, 6, 8, 10});
  auto f2 = cyclic_ring(2);
  auto m = matrix_ring(f2, 2);
  std::vector<Elem> e11{matrix_element(m, f2, 2, {1, 0, 0, 0})};
  auto ann = left_annihilator(m, e11);
  CHECK(is_ideal(m, ann.sub, Side::Left));
  // matrices with zero first column
  std::vector<Elem> expect{0, matrix_element(m, f2, 2, {0, 1, 0, 0}), matrix_element(m, f2, 2, {0, 0, 0, 1}),
                           matrix_element(m, f2, 2, {0, 1, 0, 1})};
  std::sort(expect.begin(), expect.end());
  CHECK(ann.sub.elements() == expect);
}

TEST_CASE("module lengths") {
  auto f3 = cyclic_ring(3);
  auto p = direct_product({f3, f3});
  auto gens = ring_generators(p);
  Subgroup zero(p.additive());
  CHECK(module_length(p, zero, zero, gens, Side::Left) == 0);
  CHECK(module_length(p, Subgroup::whole(p.additive()), zero, gens, Side::Left) == 2);
  auto z4 = cyclic_ring(4);
  auto series = composition_series(z4, Subgroup::whole(z4.additive()), Subgroup(z4.additive()),
                                   ring_generators(z4), Side::Left);
  REQUIRE(series.size() == 3);
  CHECK(series[1].elements() == std::vector<Elem>{0, 2});
  auto m = matrix_ring(cyclic_ring(2), 2);
  CHECK(module_length(m, Subgroup::whole(m.additive()), Subgroup(m.additive()), ring_generators(m), Side::Left) ==
        2);
  CHECK(module_length(m, Subgroup::whole(m.additive()), Subgroup(m.additive()), ring_generators(m),
                      Side::TwoSided) == 1);
}

TEST_CASE("property: length is additive along a composition series") {
  for (const auto& r : family()) {
    CAPTURE(r.name());
    auto gens = ring_generators(r);
    auto whole = Subgroup::whole(r.additive());
    auto series = composition_series(r, whole, Subgroup(r.additive()), gens, Side::Left);
    std::size_t total = series.size() - 1;
    for (std::size_t i = 0; i < series.size(); ++i) {
      CHECK(is_ideal(r, series[i], Side::Left));
      CHECK(module_length(r, series[i], Subgroup(r.additive()), gens, Side::Left) +
                module_length(r, whole, series[i], gens, Side::Left) ==
            total);
    }
  }
}
