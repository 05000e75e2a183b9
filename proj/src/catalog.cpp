#include "ringinv/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ringinv/theorems.hpp"

namespace ringinv {

namespace {

std::string group_label(const AutomorphismGroup& g) {
  if (g.order() == 1) return "trivial";
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element_order(i) == g.order()) return "C" + std::to_string(g.order());
  return "G" + std::to_string(g.order());
}

Instance make_instance(std::string name, AutomorphismGroup g, std::string provenance = "constructed") {
  Instance inst{std::move(name), g.ring(), std::move(g), {}, std::move(provenance)};
  inst.tags = derive_tags(inst);
  return inst;
}

AutomorphismGroup swap_group(const FiniteRing& r) {
  return AutomorphismGroup::close(r, {RingAutomorphism::make(r, {r.gen(1), r.gen(0)}, "swap")}, "C2");
}

AutomorphismGroup negation_group(const FiniteRing& r) {
  std::vector<Elem> images;
  for (std::size_t i = 0; i < r.rank(); ++i) images.push_back(r.neg(r.gen(i)));
  return AutomorphismGroup::close(r, {RingAutomorphism::make(r, images, "neg")}, "C2");
}

AutomorphismGroup f4_group(const FiniteRing& r) {
  auto mw = RingAutomorphism::make(r, {r.element({0, 1}), r.element({1, 1})}, "w");
  auto frob = RingAutomorphism::make(r, {r.element({1, 0}), r.element({1, 1})}, "frob");
  return AutomorphismGroup::close(r, {mw, frob}, "S3");
}

Subgroup generated_subring(const FiniteRing& r, const std::vector<Elem>& gens) {
  Subgroup s = Subgroup::span(r.additive(), gens);
  while (true) {
    Subgroup t = sum(s, product(r, s, s));
    if (t == s) return s;
    s = t;
  }
}

std::string token(std::string s) {
  for (char& c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '=') c = '_';
  return s.empty() ? "_" : s;
}

}  // namespace

bool Instance::has_tag(const std::string& t) const { return std::binary_search(tags.begin(), tags.end(), t); }

std::vector<std::string> derive_tags(const Instance& inst, const Caps& caps) {
  Analysis a(inst.action(), caps);
  std::vector<std::string> tags;
  tags.push_back(inst.ring.is_unital() ? "unital" : "non-unital");
  if (a.nilpotency().index) tags.push_back("nilpotent");
  if (a.prime_radical().is_zero()) tags.push_back("semiprime");
  for (auto p : a.bad_primes().list()) tags.push_back("bad-prime-" + std::to_string(p));
  if (a.fixed().is_zero()) tags.push_back("fixed-ring-zero");
  if (a.order_invertible()) tags.push_back("order-invertible");
  if (a.n() == 1) tags.push_back("trivial-group");
  if (!a.splittings().found.empty()) tags.push_back("splitting-exists");
  if (a.proper_splitting_group(Side::Left) == Tri::Yes || a.proper_splitting_group(Side::Right) == Tri::Yes)
    tags.push_back("proper-splitting");
  auto n1 = check(TheoremId::N1, a);
  if (std::all_of(n1.hypotheses.begin(), n1.hypotheses.end(), [](const Clause& c) { return c.status == Status::Holds; }))
    tags.push_back("n1-hypotheses-hold");
  std::sort(tags.begin(), tags.end());
  return tags;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order " << order << ", Z/";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) os << (i ? " + Z/" : "") << invariant_factors[i];
  os << ", units " << units << ", |n(R)| " << prime_radical_order << ", udim " << udim
     << (udim_exhaustive ? "" : "+") << (unital ? ", unital" : ", non-unital");
  return os.str();
}

Fingerprint fingerprint(const FiniteRing& r, const Caps& caps) {
  Fingerprint f;
  f.order = r.order();
  f.invariant_factors = cyclic_decomposition(Subgroup::whole(r.additive())).abstract.orders();
  f.unital = r.is_unital();
  f.units = f.unital ? regular_elements_quotient(r).units.size() : 0;
  f.prime_radical_order = prime_radical(r).order();
  auto u = uniform_dimension(r, Side::Left, caps.udim);
  f.udim = u.value;
  f.udim_exhaustive = u.exhaustive;
  return f;
}

std::vector<Instance> dedup_by_fingerprint(std::vector<Instance> list, const Caps& caps) {
  std::set<std::pair<Fingerprint, std::size_t>> seen;
  std::vector<Instance> out;
  for (auto& inst : list)
    if (seen.insert({fingerprint(inst.ring, caps), inst.group.order()}).second) out.push_back(std::move(inst));
  return out;
}

std::vector<Instance> named_instances() {
  std::vector<Instance> out;
  auto f2 = cyclic_ring(2), f3 = cyclic_ring(3);

  auto z12 = cyclic_ring(12);
  out.push_back(make_instance("Z12", AutomorphismGroup::trivial(z12)));
  out.push_back(make_instance("F3xF3", swap_group(direct_product({f3, f3}, "F3xF3"))));
  out.push_back(make_instance("F2xF2", swap_group(direct_product({f2, f2}, "F2xF2"))));
  out.push_back(make_instance("2Z/8Z", negation_group(FiniteRing::validate("2Z/8Z", RingTable{{4}, {{2}}, {}}))));

  auto m2 = matrix_ring(f2, 2, "M2(F2)");
  out.push_back(make_instance(
      "M2(F2)", AutomorphismGroup::close(m2, {inner_automorphism(m2, matrix_element(m2, f2, 2, {1, 1, 0, 1}))}, "C2")));

  auto f4 = zero_mult_ring(AdditiveGroup({2, 2}), "F4-zero");
  out.push_back(make_instance("F4-zero", f4_group(f4)));

  out.push_back(make_instance("F2[C2]", AutomorphismGroup::trivial(group_ring(f2, {{0, 1}, {1, 0}}, "F2[C2]"))));

  auto m3 = matrix_ring(f3, 2, "M2(F3)");
  out.push_back(make_instance(
      "M2(F3)", AutomorphismGroup::close(m3, {inner_automorphism(m3, matrix_element(m3, f3, 2, {1, 0, 0, 2}))}, "C2")));

  // A = S x R with R^G = 0, |G| R = 0 and the trivial action on S = Z/6.
  {
    auto s = cyclic_ring(6);
    std::vector<FiniteRing> factors{s, f4};
    auto a = direct_product(factors, "Z6xF4-zero");
    auto lift = [&](const RingAutomorphism& g) {
      std::vector<Elem> images;
      for (std::size_t i = 0; i < s.rank(); ++i) images.push_back(product_element(a, factors, {s.gen(i), 0}));
      for (std::size_t i = 0; i < f4.rank(); ++i) images.push_back(product_element(a, factors, {0, g(f4.gen(i))}));
      return RingAutomorphism::make(a, images, g.name());
    };
    auto g = f4_group(f4);
    std::vector<RingAutomorphism> gens;
    for (const auto& x : g.generators()) gens.push_back(lift(x));
    out.push_back(make_instance("Z6xF4-zero", AutomorphismGroup::close(a, gens, "S3")));
  }

  out.push_back(make_instance("F3^2-zero", swap_group(zero_mult_ring(AdditiveGroup({3, 3}), "F3^2-zero"))));

  auto f4f = polynomial_quotient_ring(2, {1, 1}, "F4");
  out.push_back(make_instance(
      "F4", AutomorphismGroup::close(f4f, {RingAutomorphism::make(f4f, {f4f.element({1, 0}), f4f.element({1, 1})}, "frob")},
                                     "C2")));
  out.push_back(make_instance("Z4xZ4", swap_group(direct_product({cyclic_ring(4), cyclic_ring(4)}, "Z4xZ4"))));
  out.push_back(make_instance("Z9-zero", negation_group(zero_mult_ring(AdditiveGroup({9}), "Z9-zero"))));
  {
    auto t2 = subring_ring(m2,
                           Subgroup::span(m2.additive(), std::vector<Elem>{matrix_element(m2, f2, 2, {1, 0, 0, 0}),
                                                                           matrix_element(m2, f2, 2, {0, 1, 0, 0}),
                                                                           matrix_element(m2, f2, 2, {0, 0, 0, 1})}),
                           "T2(F2)");
    auto search = search_automorphisms(t2.ring, 64, 100000);
    out.push_back(make_instance("T2(F2)", AutomorphismGroup::close(t2.ring, search.found, "Aut")));
  }
  for (auto& inst : out) inst.group.set_name(inst.group.name().empty() ? group_label(inst.group) : inst.group.name());
  return out;
}

std::optional<Instance> find_named(const std::string& name) {
  for (auto& inst : named_instances())
    if (inst.name == name) return inst;
  return std::nullopt;
}

// Random generation ----------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> s3_table() {
  std::vector<std::array<std::size_t, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

std::vector<FiniteRing> pool() {
  auto f2 = cyclic_ring(2), f3 = cyclic_ring(3), z4 = cyclic_ring(4);
  auto m2 = matrix_ring(f2, 2, "M2(F2)");
  return {m2,
          matrix_ring(f3, 2, "M2(F3)"),
          group_ring(f2, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "F2[C3]"),
          group_ring(f3, {{0, 1}, {1, 0}}, "F3[C2]"),
          group_ring(z4, {{0, 1}, {1, 0}}, "Z4[C2]"),
          polynomial_quotient_ring(4, {0, 0}, "Z4[x]/(x^2)"),
          polynomial_quotient_ring(2, {0, 0, 0}, "F2[x]/(x^3)"),
          polynomial_quotient_ring(3, {2, 0}, "F3[x]/(x^2-2)"),
          polynomial_quotient_ring(2, {1, 1, 0}, "F2[x]/(x^3+x+1)"),
          direct_product({f2, f3, z4}, "F2xF3xZ4"),
          unitalize(zero_mult_ring(AdditiveGroup({2, 2}))),
          zero_mult_ring(AdditiveGroup({2, 4})),
          matrix_ring(z4, 2, "M2(Z4)"),
          group_ring(f2, s3_table(), "F2[S3]"),
          group_ring(z4, {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, "Z4[C2xC2]"),
          group_ring(f3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "F3[C3]")};
}

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::optional<FiniteRing> random_table(std::mt19937_64& rng, std::uint64_t max_order, const std::string& name) {
  static const std::int64_t choices[] = {2, 3, 4, 5, 8, 9};
  std::vector<std::int64_t> orders;
  std::uint64_t order = 1;
  std::size_t rank = static_cast<std::size_t>(pick(rng, 1, 3));
  for (std::size_t i = 0; i < rank; ++i) {
    std::int64_t d = choices[pick(rng, 0, 5)];
    if (order * d > max_order) break;
    orders.push_back(d);
    order *= d;
  }
  if (orders.empty()) return std::nullopt;
  const std::size_t k = orders.size();
  RingTable t{orders, std::vector<Coords>(k * k, Coords(k, 0)), std::nullopt};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (pick(rng, 0, 1) == 0) continue;
      std::int64_t g = std::gcd(orders[i], orders[j]);
      for (std::size_t c = 0; c < k; ++c) {
        std::int64_t step = orders[c] / std::gcd(orders[c], g);
        t.mul[i * k + j][c] = step * pick(rng, 0, orders[c] / step - 1);
      }
    }
  try {
    return FiniteRing::validate(name, t);
  } catch (const RingError&) {
    return std::nullopt;
  }
}

std::optional<FiniteRing> random_construction(std::mt19937_64& rng, std::uint64_t max_order, const std::string& name) {
  static const std::vector<FiniteRing> rings = pool();
  const FiniteRing& base = rings[pick(rng, 0, static_cast<std::int64_t>(rings.size()) - 1)];
  std::vector<Elem> gens;
  std::size_t ngens = static_cast<std::size_t>(pick(rng, 1, 3));
  for (std::size_t i = 0; i < ngens; ++i) gens.push_back(static_cast<Elem>(pick(rng, 0, base.order() - 1)));
  switch (pick(rng, 0, 2)) {
    case 0: {  // subring
      Subgroup s = generated_subring(base, gens);
      if (s.order() > max_order) return std::nullopt;
      return subring_ring(base, s, name).ring;
    }
    case 1: {  // quotient by a principal ideal
      auto i = generated_ideal(base, std::span<const Elem>(gens.data(), 1), Side::TwoSided);
      if (base.order() / i.sub.order() > max_order) return std::nullopt;
      return quotient_by_ideal(base, i, name).ring;
    }
    default: {  // product of a subring and a small cyclic ring
      Subgroup s = generated_subring(base, gens);
      auto c = cyclic_ring(pick(rng, 2, 5));
      if (s.order() * c.order() > max_order) return std::nullopt;
      return direct_product({subring_ring(base, s, "S").ring, c}, name);
    }
  }
}

struct Attempt {
  std::optional<Instance> inst;
  bool table = false;
  bool valid = false;
  bool rigid = false;
};

Attempt attempt(std::uint64_t seed, std::size_t index, std::uint64_t max_order) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(index)};
  std::mt19937_64 rng(seq);
  Attempt out;
  std::string name = "rand-" + std::to_string(seed) + "-" + std::to_string(index);
  out.table = pick(rng, 0, 2) == 0;
  auto ring = out.table ? random_table(rng, max_order, name) : random_construction(rng, max_order, name);
  if (!ring || ring->order() < 2) return out;
  ring = ring->renamed(name);
  out.valid = true;
  auto search = search_automorphisms(*ring, 32, 20000);
  std::vector<RingAutomorphism> nontrivial;
  for (auto& g : search.found)
    if (!g.is_identity()) nontrivial.push_back(g);
  std::optional<AutomorphismGroup> group;
  if (!nontrivial.empty()) {
    std::vector<RingAutomorphism> gens;
    std::size_t ngens = static_cast<std::size_t>(pick(rng, 1, 2));
    for (std::size_t i = 0; i < ngens; ++i) {
      auto g = nontrivial[pick(rng, 0, static_cast<std::int64_t>(nontrivial.size()) - 1)];
      g.set_name("g" + std::to_string(i + 1));
      gens.push_back(g);
    }
    try {
      group = AutomorphismGroup::close(*ring, gens, "", 48);
    } catch (const GroupError&) {
      group = AutomorphismGroup::close(*ring, {gens[0]}, "", 720);
    }
    group->set_name(group_label(*group));
  } else {
    group = AutomorphismGroup::trivial(*ring);
    out.rigid = true;
  }
  Instance inst{name, *ring, *group, {}, "random(seed=" + std::to_string(seed) + ",index=" + std::to_string(index) + ")"};
  inst.tags = derive_tags(inst);
  if (out.rigid) {
    inst.tags.push_back("no-automorphism-found");
    std::sort(inst.tags.begin(), inst.tags.end());
  }
  out.inst = std::move(inst);
  return out;
}

}  // namespace

RandomBatch random_instances(const RandomParams& params) {
  if (params.max_order < 2 || params.max_order > 256) throw std::invalid_argument("random_instances: max_order must be in [2, 256]");
  RandomBatch batch;
  const std::size_t max_attempts = params.max_attempts ? params.max_attempts : 40 * std::max<std::size_t>(params.count, 1);
  const std::size_t jobs = std::max<std::size_t>(params.jobs, 1);
  std::size_t next = 0;
  while (batch.instances.size() < params.count && next < max_attempts) {
    std::size_t chunk = std::min(max_attempts - next, std::max<std::size_t>(jobs * 4, params.count - batch.instances.size()));
    std::vector<Attempt> results(chunk);
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < chunk; i += jobs) results[i] = attempt(params.seed, next + i, params.max_order);
      });
    for (auto& t : workers) t.join();
    for (auto& r : results) {
      if (batch.instances.size() >= params.count) break;
      ++batch.attempted;
      batch.table_attempts += r.table;
      batch.table_valid += r.table && r.valid;
      batch.valid += r.valid;
      if (r.inst) {
        batch.rigid += r.rigid;
        batch.instances.push_back(std::move(*r.inst));
      }
    }
    next += chunk;
  }
  return batch;
}

// Text format ---------------------------------------------------------------

Instance canonical(const Instance& inst) {
  const FiniteRing& r = inst.ring;
  SubringRing sr = subring_ring(r, Subgroup::whole(r.additive()), r.name());
  std::vector<RingAutomorphism> gens;
  for (const auto& g : inst.group.generators()) {
    std::vector<Elem> images;
    for (std::size_t j = 0; j < sr.ring.rank(); ++j) images.push_back(*sr.from_parent(g(sr.to_parent(sr.ring.gen(j)))));
    gens.push_back(RingAutomorphism::make(sr.ring, images, g.name()));
  }
  auto group = AutomorphismGroup::close(sr.ring, gens, inst.group.name(), std::max<std::size_t>(720, inst.group.order()));
  return Instance{inst.name, sr.ring, std::move(group), inst.tags, inst.provenance};
}

std::string format_instances(const std::vector<Instance>& list) {
  std::ostringstream os;
  bool first = true;
  for (const auto& raw : list) {
    Instance inst = canonical(raw);
    const FiniteRing& r = inst.ring;
    const std::size_t k = r.rank();
    if (!first) os << "\n";
    first = false;
    os << "ring " << token(inst.name) << "\n";
    std::string tags;
    for (const auto& t : inst.tags)
      if (t != "no-automorphism-found") tags += " " + t;
    if (!tags.empty()) os << "# tags:" << tags << "\n";
    os << "add";
    for (auto d : r.additive().orders()) os << " " << d;
    os << "\n";
    auto write_coords = [&](Elem x) {
      for (auto c : r.coords(x)) os << " " << c;
      os << "\n";
    };
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        os << "mul " << i + 1 << " " << j + 1 << " ->";
        write_coords(r.generator_product(i, j));
      }
    if (r.identity()) {
      os << "unit";
      write_coords(*r.identity());
    }
    std::vector<std::string> names;
    std::set<std::string> used;
    for (const auto& g : inst.group.generators()) {
      std::string n = token(g.name());
      if (g.name().empty() || used.count(n)) n = "a" + std::to_string(names.size() + 1);
      used.insert(n);
      names.push_back(n);
      os << "aut " << n << "\n";
      for (std::size_t i = 0; i < k; ++i) {
        os << "gen " << i + 1 << " ->";
        write_coords(g.images()[i]);
      }
    }
    os << "group " << token(inst.group.name()) << " =";
    for (const auto& n : names) os << " " << n;
    os << "\n";
  }
  return os.str();
}

namespace {

std::int64_t parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

struct Block {
  std::string name;
  std::size_t line = 0;
  std::optional<std::vector<std::int64_t>> orders;
  std::map<std::pair<std::size_t, std::size_t>, Coords> mul;
  std::optional<Coords> unit;
  std::vector<std::pair<std::string, std::vector<std::optional<Coords>>>> auts;
  std::vector<std::size_t> aut_lines;
  std::optional<std::pair<std::string, std::vector<std::string>>> group;
  std::size_t group_line = 0;
};

Instance build(const Block& b) {
  const std::size_t k = b.orders->size();
  RingTable t{*b.orders, std::vector<Coords>(k * k), b.unit};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = b.mul.find({i, j});
      if (it == b.mul.end())
        throw ParseError(b.line, "ring " + b.name + ": missing mul " + std::to_string(i + 1) + " " + std::to_string(j + 1));
      t.mul[i * k + j] = it->second;
    }
  FiniteRing r;
  try {
    r = FiniteRing::validate(b.name, t);
  } catch (const RingError& e) {
    std::vector<std::size_t> w;
    for (auto x : e.witness()) w.push_back(x + 1);
    throw ValidationError("ring " + b.name + ": " + e.what(), w);
  }
  std::map<std::string, RingAutomorphism> auts;
  for (std::size_t a = 0; a < b.auts.size(); ++a) {
    const auto& [name, gens] = b.auts[a];
    std::vector<Elem> images;
    for (std::size_t i = 0; i < k; ++i) {
      if (!gens[i]) throw ParseError(b.aut_lines[a], "aut " + name + ": missing gen " + std::to_string(i + 1));
      images.push_back(r.element(*gens[i]));
    }
    try {
      auts.emplace(name, RingAutomorphism::make(r, images, name));
    } catch (const GroupError& e) {
      throw ValidationError("aut " + name + ": " + e.what());
    }
  }
  std::vector<RingAutomorphism> gens;
  std::string gname = "trivial";
  if (b.group) {
    gname = b.group->first;
    for (const auto& n : b.group->second) {
      auto it = auts.find(n);
      if (it == auts.end()) throw ParseError(b.group_line, "unknown automorphism '" + n + "'");
      gens.push_back(it->second);
    }
  }
  try {
    auto g = AutomorphismGroup::close(r, gens, gname);
    Instance inst{b.name, r, std::move(g), {}, "file"};
    inst.tags = derive_tags(inst);
    return inst;
  } catch (const GroupError& e) {
    throw ValidationError("group " + gname + ": " + e.what());
  }
}

}  // namespace

std::vector<Instance> parse_instances(const std::string& text) {
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> open_aut;  // aut block currently receiving gen lines
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "ring") {
      if (tok.size() != 2) throw ParseError(line, "expected 'ring <name>'");
      blocks.push_back(Block{tok[1], line, {}, {}, {}, {}, {}, {}, 0});
      open_aut.reset();
      continue;
    }
    if (blocks.empty()) throw ParseError(line, "'" + kw + "' before any 'ring' line");
    Block& b = blocks.back();
    auto coords_after = [&](std::size_t from) {
      if (!b.orders) throw ParseError(line, "'" + kw + "' before the 'add' line");
      if (tok.size() - from != b.orders->size())
        throw ParseError(line, "expected " + std::to_string(b.orders->size()) + " coordinates");
      Coords c;
      for (std::size_t i = from; i < tok.size(); ++i) c.push_back(parse_int(tok[i], line));
      return c;
    };
    auto index = [&](const std::string& s) {
      auto v = parse_int(s, line);
      if (v < 1 || static_cast<std::size_t>(v) > b.orders->size())
        throw ParseError(line, "generator index " + s + " out of range");
      return static_cast<std::size_t>(v - 1);
    };
    if (kw == "add") {
      if (b.orders) throw ParseError(line, "duplicate 'add' line");
      std::vector<std::int64_t> orders;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto d = parse_int(tok[i], line);
        if (d < 2) throw ParseError(line, "additive orders must be at least 2");
        orders.push_back(d);
      }
      b.orders = orders;
    } else if (kw == "mul") {
      if (!b.orders) throw ParseError(line, "'mul' before the 'add' line");
      if (tok.size() < 4 || tok[3] != "->") throw ParseError(line, "expected 'mul i j -> c1 ... ck'");
      auto key = std::make_pair(index(tok[1]), index(tok[2]));
      if (b.mul.count(key)) throw ParseError(line, "duplicate mul entry");
      b.mul[key] = coords_after(4);
      open_aut.reset();
    } else if (kw == "unit") {
      if (b.unit) throw ParseError(line, "duplicate 'unit' line");
      b.unit = coords_after(1);
      open_aut.reset();
    } else if (kw == "aut") {
      if (!b.orders) throw ParseError(line, "'aut' before the 'add' line");
      if (tok.size() != 2) throw ParseError(line, "expected 'aut <name>'");
      for (const auto& a : b.auts)
        if (a.first == tok[1]) throw ParseError(line, "duplicate automorphism '" + tok[1] + "'");
      b.auts.push_back({tok[1], std::vector<std::optional<Coords>>(b.orders->size())});
      b.aut_lines.push_back(line);
      open_aut = b.auts.size() - 1;
    } else if (kw == "gen") {
      if (!open_aut) throw ParseError(line, "'gen' outside an 'aut' block");
      if (tok.size() < 3 || tok[2] != "->") throw ParseError(line, "expected 'gen i -> c1 ... ck'");
      auto i = index(tok[1]);
      auto& slot = b.auts[*open_aut].second[i];
      if (slot) throw ParseError(line, "duplicate gen entry");
      slot = coords_after(3);
    } else if (kw == "group") {
      if (b.group) throw ParseError(line, "duplicate 'group' line");
      if (tok.size() < 3 || tok[2] != "=") throw ParseError(line, "expected 'group <name> = <aut> ...'");
      b.group = {tok[1], std::vector<std::string>(tok.begin() + 3, tok.end())};
      b.group_line = line;
      open_aut.reset();
    } else {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }
  std::vector<Instance> out;
  for (const auto& b : blocks) {
    if (!b.orders) throw ParseError(b.line, "ring " + b.name + " has no 'add' line");
    out.push_back(build(b));
  }
  return out;
}

std::vector<Instance> load_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instances(ss.str());
}

void save_instances(const std::string& path, const std::vector<Instance>& list) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_instances(list);
}

}  // namespace ringinv
