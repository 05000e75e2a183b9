#include "ringinv/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace ringinv {

namespace {

std::vector<Elem> build_permutation(const FiniteRing& r, const std::vector<Elem>& images) {
  const AdditiveGroup& g = r.additive();
  const std::size_t k = g.rank();
  std::vector<Elem> perm(g.order(), 0);
  Coords c(k, 0);
  for (std::uint64_t x = 1; x < g.order(); ++x) {
    std::size_t j = k;
    while (j-- > 0) {
      if (++c[j] < g.orders()[j]) break;
      c[j] = 0;
    }
    perm[x] = g.add(perm[x - g.generator(j)], images[j]);
  }
  return perm;
}

struct ImagesHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

RingAutomorphism RingAutomorphism::from_images_unchecked(const FiniteRing& r, std::vector<Elem> images,
                                                         std::string name) {
  RingAutomorphism a;
  a.perm_ = build_permutation(r, images);
  a.images_ = std::move(images);
  a.name_ = std::move(name);
  return a;
}

RingAutomorphism RingAutomorphism::make(const FiniteRing& r, std::vector<Elem> images, std::string name) {
  const std::size_t k = r.rank();
  if (images.size() != k) throw GroupError(GroupError::Kind::NotAutomorphism, "wrong number of generator images");
  for (std::size_t i = 0; i < k; ++i) {
    if (images[i] >= r.order()) throw GroupError(GroupError::Kind::NotAutomorphism, "image out of range");
    if (r.scale(r.additive().orders()[i], images[i]) != 0)
      throw GroupError(GroupError::Kind::NotAutomorphism,
                       "image of generator " + std::to_string(i + 1) + " has incompatible order");
  }
  RingAutomorphism a = from_images_unchecked(r, std::move(images), std::move(name));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a(r.generator_product(i, j)) != r.mul(a.images_[i], a.images_[j]))
        throw GroupError(GroupError::Kind::NotAutomorphism, "does not preserve e" + std::to_string(i + 1) + "*e" +
                                                                std::to_string(j + 1));
  std::vector<bool> seen(r.order(), false);
  for (Elem y : a.perm_) {
    if (seen[y]) throw GroupError(GroupError::Kind::NotAutomorphism, "not bijective");
    seen[y] = true;
  }
  return a;
}

RingAutomorphism RingAutomorphism::identity(const FiniteRing& r) {
  std::vector<Elem> images;
  for (std::size_t i = 0; i < r.rank(); ++i) images.push_back(r.gen(i));
  return from_images_unchecked(r, std::move(images), "id");
}

bool RingAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

RingAutomorphism RingAutomorphism::after(const RingAutomorphism& inner, const FiniteRing& r) const {
  (void)r;
  RingAutomorphism out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = perm_[inner.images_[i]];
  out.perm_.resize(perm_.size());
  for (std::size_t x = 0; x < perm_.size(); ++x) out.perm_[x] = perm_[inner.perm_[x]];
  return out;
}

// ---------------------------------------------------------------------------

AutomorphismGroup AutomorphismGroup::close(const FiniteRing& r, const std::vector<RingAutomorphism>& gens,
                                           std::string name, std::size_t cap) {
  AutomorphismGroup g;
  g.ring_ = r;
  g.name_ = std::move(name);
  RingAutomorphism id = RingAutomorphism::identity(r);
  for (const auto& a : gens)
    if (!(a == id) && std::find(g.generators_.begin(), g.generators_.end(), a) == g.generators_.end())
      g.generators_.push_back(a);

  std::vector<RingAutomorphism> elems{id};
  std::unordered_map<std::vector<Elem>, std::size_t, ImagesHash> index{{id.images(), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : g.generators_) {
      RingAutomorphism c = gen.after(elems[head], r);
      if (index.count(c.images())) continue;
      if (elems.size() >= cap)
        throw GroupError(GroupError::Kind::GroupTooLarge, "group closure exceeds cap " + std::to_string(cap));
      index.emplace(c.images(), elems.size());
      elems.push_back(std::move(c));
    }
  }
  std::sort(elems.begin() + 1, elems.end());
  index.clear();
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i].images(), i);
  for (auto& gen : g.generators_) {
    const auto& named = gen.name();
    auto& e = elems[index.at(gen.images())];
    if (e.name().empty()) e.set_name(named);
  }
  elems[0].set_name("id");
  const std::size_t n = elems.size();
  g.table_.assign(n * n, 0);
  std::vector<Elem> buf(r.rank());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < r.rank(); ++l) buf[l] = elems[i](elems[j].images()[l]);
      g.table_[i * n + j] = index.at(buf);
    }
  g.inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.table_[i * n + j] == 0) {
        g.inverse_[i] = j;
        break;
      }
  g.elements_ = std::move(elems);
  return g;
}

AutomorphismGroup AutomorphismGroup::trivial(const FiniteRing& r, std::string name) {
  return close(r, {}, std::move(name));
}

std::size_t AutomorphismGroup::element_order(std::size_t i) const {
  std::size_t k = 1, cur = i;
  while (cur != 0) {
    cur = compose(i, cur);
    ++k;
  }
  return k;
}

std::optional<std::size_t> AutomorphismGroup::find(const RingAutomorphism& a) const {
  if (a == elements_[0]) return 0;
  auto it = std::lower_bound(elements_.begin() + 1, elements_.end(), a);
  if (it != elements_.end() && *it == a) return static_cast<std::size_t>(it - elements_.begin());
  return std::nullopt;
}

SubgroupIndices AutomorphismGroup::all_indices() const {
  SubgroupIndices all(order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

bool AutomorphismGroup::is_subgroup(const SubgroupIndices& h) const {
  if (h.empty() || h[0] != 0) return false;
  std::vector<bool> in(order(), false);
  for (auto i : h) in[i] = true;
  for (auto a : h)
    for (auto b : h)
      if (!in[compose(a, b)]) return false;
  return true;
}

bool AutomorphismGroup::is_normal(const SubgroupIndices& h) const {
  std::vector<bool> in(order(), false);
  for (auto i : h) in[i] = true;
  for (std::size_t g = 0; g < order(); ++g)
    for (auto n : h)
      if (!in[compose(compose(g, n), inverse(g))]) return false;
  return true;
}

CosetDecomposition cosets(const AutomorphismGroup& g, const SubgroupIndices& n) {
  CosetDecomposition out;
  const std::size_t none = static_cast<std::size_t>(-1);
  out.coset_of.assign(g.order(), none);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.coset_of[x] != none) continue;
    const std::size_t c = out.representatives.size();
    out.representatives.push_back(x);
    for (auto m : n) out.coset_of[g.compose(x, m)] = c;
  }
  return out;
}

std::optional<SubgroupIndices> p_normal_complement(const AutomorphismGroup& g, std::int64_t p) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (p < 2 || n % p != 0)
    throw GroupError(GroupError::Kind::NotDividing, std::to_string(p) + " does not divide |G| = " + std::to_string(n));
  std::int64_t m = n;
  while (m % p == 0) m /= p;
  SubgroupIndices census;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (static_cast<std::int64_t>(g.element_order(i)) % p != 0) census.push_back(i);
  if (static_cast<std::int64_t>(census.size()) != m) return std::nullopt;
  if (!g.is_subgroup(census) || !g.is_normal(census)) return std::nullopt;
  return census;
}

Subgroup fixed_subgroup(const AutomorphismGroup& g, const SubgroupIndices& h) {
  return subgroup_where(g.ring(), [&](Elem x) {
    for (auto i : h)
      if (g[i](x) != x) return false;
    return true;
  });
}

InducedGroup restrict_to_subring(const AutomorphismGroup& g, const SubringRing& s) {
  const std::size_t m = s.ring.rank();
  auto restrict = [&](const RingAutomorphism& a) {
    for (Elem c : s.carrier.generators())
      if (!s.carrier.contains(a(c))) throw GroupError(GroupError::Kind::NotFixedRing, "subring is not G-stable");
    std::vector<Elem> images(m);
    for (std::size_t j = 0; j < m; ++j) images[j] = *s.from_parent(a(s.to_parent(s.ring.gen(j))));
    return RingAutomorphism::from_images_unchecked(s.ring, std::move(images), a.name());
  };
  std::vector<RingAutomorphism> gens;
  for (const auto& a : g.generators()) gens.push_back(restrict(a));
  InducedGroup out;
  out.group = AutomorphismGroup::close(s.ring, gens, g.name(), std::max<std::size_t>(g.order(), 1));
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto idx = out.group.find(restrict(g[i]));
    if (!idx) throw std::logic_error("restriction not in the generated group");
    out.images.push_back(*idx);
  }
  return out;
}

InducedGroup induce_on_quotient(const AutomorphismGroup& g, const QuotientRing& q) {
  const std::size_t m = q.ring.rank();
  auto induce = [&](const RingAutomorphism& a) {
    for (Elem c : q.kernel.generators())
      if (!q.kernel.contains(a(c))) throw GroupError(GroupError::Kind::NotFixedRing, "ideal is not G-stable");
    std::vector<Elem> images(m);
    for (std::size_t j = 0; j < m; ++j) images[j] = q.projection[a(q.lift[q.ring.gen(j)])];
    return RingAutomorphism::from_images_unchecked(q.ring, std::move(images), a.name());
  };
  std::vector<RingAutomorphism> gens;
  for (const auto& a : g.generators()) gens.push_back(induce(a));
  InducedGroup out;
  out.group = AutomorphismGroup::close(q.ring, gens, g.name(), std::max<std::size_t>(g.order(), 1));
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto idx = out.group.find(induce(g[i]));
    if (!idx) throw std::logic_error("induced map not in the generated group");
    out.images.push_back(*idx);
  }
  return out;
}

QuotientAction quotient_action(const AutomorphismGroup& g, const SubgroupIndices& n, const SubringRing& s) {
  if (!g.is_subgroup(n) || !g.is_normal(n)) throw GroupError(GroupError::Kind::NotNormal, "N is not normal in G");
  if (!(s.carrier == fixed_subgroup(g, n))) throw GroupError(GroupError::Kind::NotFixedRing, "S is not R^N");
  QuotientAction out;
  out.cosets = cosets(g, n);
  out.quotient_order = out.cosets.representatives.size();
  out.induced = restrict_to_subring(g, s);
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::size_t rep = out.cosets.representatives[out.cosets.coset_of[i]];
    if (out.induced.images[i] != out.induced.images[rep])
      throw std::logic_error("induced action depends on the coset representative");
  }
  return out;
}

BigInt h_constant(std::uint64_t n) {
  BigInt h = 1, binom = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    binom = binom * (n - i + 1) / i;
    h *= binom + 1;
  }
  return h;
}

std::optional<Elem> p_group_fixed_point(const AutomorphismGroup& pg, const Subgroup& v) {
  const auto n = static_cast<std::int64_t>(pg.order());
  auto primes = prime_factors(n);
  if (primes.size() != 1) throw GroupError(GroupError::Kind::NotPGroup, "|P| = " + std::to_string(n) + " is not a prime power");
  const std::int64_t p = primes[0];
  std::uint64_t o = v.order();
  while (o % static_cast<std::uint64_t>(p) == 0) o /= static_cast<std::uint64_t>(p);
  if (o != 1) throw GroupError(GroupError::Kind::NotPModule, "|V| is not a power of " + std::to_string(p));
  for (const auto& a : pg.generators())
    for (Elem c : v.generators())
      if (!v.contains(a(c))) throw GroupError(GroupError::Kind::NotPModule, "V is not P-stable");
  if (v.is_zero()) return std::nullopt;
  for (Elem x : v.elements()) {
    if (x == 0) continue;
    bool fixed = true;
    for (const auto& a : pg.generators()) fixed = fixed && a(x) == x;
    if (fixed) return x;
  }
  return std::nullopt;
}

AutomorphismSearch search_automorphisms(const FiniteRing& r, std::size_t max_found, std::size_t node_budget) {
  const AdditiveGroup& g = r.additive();
  const std::size_t k = g.rank();
  AutomorphismSearch out;
  // candidates per generator: elements of exactly the same additive order
  std::vector<std::vector<Elem>> cand(k);
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    auto o = g.element_order(static_cast<Elem>(x));
    for (std::size_t i = 0; i < k; ++i)
      if (o == g.orders()[i]) cand[i].push_back(static_cast<Elem>(x));
  }
  // pair (a, b) becomes checkable once generators up to `ready` are assigned
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks(k);
  std::vector<Coords> prod(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      prod[a * k + b] = r.coords(r.generator_product(a, b));
      std::size_t ready = std::max(a, b);
      for (std::size_t l = 0; l < k; ++l)
        if (prod[a * k + b][l] != 0) ready = std::max(ready, l);
      checks[ready].push_back({a, b});
    }
  std::vector<Elem> images(k);
  std::vector<Subgroup> spans(k + 1, Subgroup(g));
  std::uint64_t expected = 1;
  std::vector<std::uint64_t> expected_at(k + 1, 1);
  for (std::size_t i = 0; i < k; ++i) expected_at[i + 1] = (expected *= static_cast<std::uint64_t>(g.orders()[i]));
  std::size_t nodes = 0;
  auto image_of = [&](const Coords& c) {
    Elem acc = 0;
    for (std::size_t l = 0; l < k; ++l)
      if (c[l] != 0) acc = g.add(acc, g.scale(c[l], images[l]));
    return acc;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (out.found.size() >= max_found) {
      out.complete = false;
      return;
    }
    if (depth == k) {
      out.found.push_back(RingAutomorphism::make(r, images));
      return;
    }
    for (Elem c : cand[depth]) {
      if (++nodes > node_budget) {
        out.complete = false;
        return;
      }
      images[depth] = c;
      spans[depth + 1] = spans[depth];
      spans[depth + 1].insert(c);
      if (spans[depth + 1].order() != expected_at[depth + 1]) continue;
      bool ok = true;
      for (auto [a, b] : checks[depth])
        if (image_of(prod[a * k + b]) != r.mul(images[a], images[b])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      rec(depth + 1);
      if (!out.complete) return;
    }
  };
  rec(0);
  return out;
}

std::optional<Elem> unit_inverse(const FiniteRing& r, Elem u) {
  if (!r.is_unital()) return std::nullopt;
  const Elem one = *r.identity();
  for (std::uint64_t v = 0; v < r.order(); ++v) {
    Elem w = static_cast<Elem>(v);
    if (r.mul(u, w) == one && r.mul(w, u) == one) return w;
  }
  return std::nullopt;
}

RingAutomorphism inner_automorphism(const FiniteRing& r, Elem u) {
  auto inv = unit_inverse(r, u);
  if (!inv) throw GroupError(GroupError::Kind::NotAutomorphism, "conjugating element is not a unit");
  std::vector<Elem> images;
  for (std::size_t i = 0; i < r.rank(); ++i) images.push_back(r.mul(r.mul(u, r.gen(i)), *inv));
  return RingAutomorphism::make(r, std::move(images));
}

}  // namespace ringinv
