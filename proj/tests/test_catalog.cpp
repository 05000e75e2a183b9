#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringinv/catalog.hpp"
#include "ringinv/theorems.hpp"
#include "support.hpp"

using namespace ringinv;

namespace {

const std::vector<Instance>& named() {
  static const auto list = named_instances();
  return list;
}

const Instance& get(const std::string& name) {
  for (const auto& i : named())
    if (i.name == name) return i;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("named catalog contents") {
  std::vector<std::string> names;
  for (const auto& i : named()) names.push_back(i.name);
  for (const char* n : {"Z12", "F3xF3", "F2xF2", "2Z/8Z", "M2(F2)", "F4-zero", "F2[C2]", "M2(F3)", "Z6xF4-zero",
                        "F3^2-zero"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
  for (const auto& i : named()) {
    CAPTURE(i.name);
    CHECK(i.tags == derive_tags(i));
    CHECK(i.provenance == "constructed");
  }
}

TEST_CASE("zero-mult F4 tags") {
  const auto& f4 = get("F4-zero");
  CHECK(f4.group.order() == 6);
  for (const char* t : {"nilpotent", "bad-prime-2", "n1-hypotheses-hold"}) CHECK(f4.has_tag(t));
}

TEST_CASE("composite instance has A^G = S and |G| A = 0") {
  const auto& a = get("Z6xF4-zero");
  const auto& r = a.ring;
  auto fixed = a.action().fixed;
  CHECK(fixed.order() == 6);
  // S = Z/6 embedded as the first factor: multiples of the first generator
  CHECK(fixed == Subgroup::span(r.additive(), std::vector<Elem>{r.gen(0)}));
  for (Elem x = 0; x < r.order(); ++x) CHECK(r.scale(static_cast<std::int64_t>(a.group.order()), x) == 0);
}

TEST_CASE("tags agree with fresh radicals and bad primes") {
  for (const auto& i : named()) {
    CAPTURE(i.name);
    CHECK(i.has_tag("semiprime") == prime_radical(i.ring).is_zero());
    auto bad = bad_primes(i.action()).list();
    for (auto p : bad) CHECK(i.has_tag("bad-prime-" + std::to_string(p)));
    std::size_t bad_tags = std::count_if(i.tags.begin(), i.tags.end(), [](const std::string& t) { return t.rfind("bad-prime-", 0) == 0; });
    CHECK(bad_tags == bad.size());
  }
}

TEST_CASE("round-trip of the named catalog") {
  std::string text = format_instances(named());
  auto loaded = parse_instances(text);
  REQUIRE(loaded.size() == named().size());
  CHECK(format_instances(loaded) == text);
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CAPTURE(loaded[i].name);
    CHECK(loaded[i].name == named()[i].name);
    CHECK(loaded[i].provenance == "file");
    CHECK(loaded[i].ring.order() == named()[i].ring.order());
    CHECK(loaded[i].group.order() == named()[i].group.order());
    CHECK(loaded[i].tags == named()[i].tags);
    CHECK(fingerprint(loaded[i].ring) == fingerprint(named()[i].ring));
    // canonical basis: invariant factors in divisibility order
    const auto& d = loaded[i].ring.additive().orders();
    for (std::size_t j = 1; j < d.size(); ++j) CHECK(d[j] % d[j - 1] == 0);
  }
}

TEST_CASE("parse errors carry line numbers") {
  const std::string good = "ring Z4\nadd 4\nmul 1 1 -> 1\n";
  CHECK(parse_instances(good).size() == 1);
  try {
    parse_instances("ring Z4\nadd 4\n# comment\nmul 1 1 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_instances("add 4\n"), ParseError);
  CHECK_THROWS_AS(parse_instances("ring X\nadd 2 2\nmul 1 1 -> 1 0\n"), ParseError);  // missing entries
  CHECK_THROWS_AS(parse_instances("ring X\nadd 4\nmul 1 1 -> x\n"), ParseError);
  CHECK_THROWS_AS(parse_instances("ring X\nadd 4\nmul 1 1 -> 1\ngroup G = nope\n"), ParseError);
  CHECK_THROWS_AS(parse_instances("ring X\nadd 4\nmul 1 1 -> 1\ngen 1 -> 1\n"), ParseError);
}

TEST_CASE("validation errors") {
  // e1 e1 = e2, e2 e1 = e1, rest zero: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
  try {
    parse_instances("ring N\nadd 2 2\nmul 1 1 -> 0 1\nmul 1 2 -> 0 0\nmul 2 1 -> 1 0\nmul 2 2 -> 0 0\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.witness().size() == 3);
    for (auto w : e.witness()) CHECK((w >= 1 && w <= 2));
  }
  CHECK_THROWS_AS(parse_instances("ring X\nadd 4\nmul 1 1 -> 1\nunit 2\n"), ValidationError);
  CHECK_THROWS_AS(parse_instances("ring X\nadd 3\nmul 1 1 -> 1\naut neg\ngen 1 -> 2\ngroup G = neg\n"), ValidationError);
}

TEST_CASE("random instances are deterministic and bounded") {
  RandomParams params;
  params.max_order = 16;
  params.count = 20;
  params.seed = 11;
  auto a = random_instances(params);
  params.jobs = 3;
  auto b = random_instances(params);
  REQUIRE(a.instances.size() == 20);
  CHECK(format_instances(a.instances) == format_instances(b.instances));
  CHECK(a.attempted == b.attempted);
  CHECK(a.valid <= a.attempted);
  CHECK(a.table_valid <= a.table_attempts);
  for (const auto& i : a.instances) {
    CHECK(i.ring.order() <= 16);
    CHECK(i.provenance.rfind("random(seed=11,", 0) == 0);
  }
  CHECK_THROWS_AS(random_instances(RandomParams{512, 1, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("random instances round-trip") {
  auto batch = random_instances(RandomParams{64, 30, 5, 0, 2});
  std::string text = format_instances(batch.instances);
  CHECK(format_instances(parse_instances(text)) == text);
}

TEST_CASE("fingerprints") {
  auto z12 = fingerprint(get("Z12").ring);
  CHECK(z12.order == 12);
  CHECK(z12.invariant_factors == std::vector<std::int64_t>{12});
  CHECK(z12.units == 4);
  CHECK(z12.prime_radical_order == 2);
  CHECK(z12.unital);
  // isomorphic presentations agree
  CHECK(fingerprint(direct_product({cyclic_ring(3), cyclic_ring(4)})) == z12);
  CHECK(fingerprint(canonical(get("M2(F2)")).ring) == fingerprint(get("M2(F2)").ring));
}

TEST_CASE("property: dedup keeps every unique fingerprint") {
  auto batch = random_instances(RandomParams{32, 40, 3, 0, 2});
  auto kept = dedup_by_fingerprint(batch.instances);
  std::map<std::pair<Fingerprint, std::size_t>, int> count;
  for (const auto& i : batch.instances) ++count[{fingerprint(i.ring), i.group.order()}];
  CHECK(kept.size() == count.size());
  for (const auto& i : batch.instances)
    if (count[{fingerprint(i.ring), i.group.order()}] == 1)
      CHECK(std::any_of(kept.begin(), kept.end(), [&](const Instance& k) { return k.name == i.name; }));
}
