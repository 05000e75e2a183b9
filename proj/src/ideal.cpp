#include "ringinv/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace ringinv {

std::vector<Elem> ring_generators(const FiniteRing& r) {
  std::vector<Elem> g;
  for (std::size_t i = 0; i < r.rank(); ++i) g.push_back(r.gen(i));
  return g;
}

Subgroup close_under(const FiniteRing& r, Subgroup s, const std::vector<Elem>& acting, Side side) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem b : s.generators()) {
      for (Elem a : acting) {
        if (side != Side::Right) changed |= s.insert(r.mul(a, b));
        if (side != Side::Left) changed |= s.insert(r.mul(b, a));
      }
    }
  }
  return s;
}

Ideal generated_ideal(const FiniteRing& r, std::span<const Elem> gens, Side side) {
  return {side, close_under(r, Subgroup::span(r.additive(), gens), ring_generators(r), side)};
}

Ideal generated_ideal(const FiniteRing& r, const Subgroup& gens, Side side) {
  return {side, close_under(r, gens, ring_generators(r), side)};
}

bool is_ideal(const FiniteRing& r, const Subgroup& s, Side side) {
  for (Elem b : s.generators())
    for (std::size_t i = 0; i < r.rank(); ++i) {
      if (side != Side::Right && !s.contains(r.mul(r.gen(i), b))) return false;
      if (side != Side::Left && !s.contains(r.mul(b, r.gen(i)))) return false;
    }
  return true;
}

bool is_subring(const FiniteRing& r, const Subgroup& s) {
  auto g = s.generators();
  for (Elem a : g)
    for (Elem b : g)
      if (!s.contains(r.mul(a, b))) return false;
  return true;
}

Subgroup product(const FiniteRing& r, const Subgroup& a, const Subgroup& b) {
  Subgroup out(r.additive());
  auto gb = b.generators();
  for (Elem x : a.generators())
    for (Elem y : gb) out.insert(r.mul(x, y));
  return out;
}

Subgroup power(const FiniteRing& r, const Subgroup& a, std::size_t k) {
  Subgroup p = a;
  for (std::size_t i = 1; i < k; ++i) {
    p = product(r, p, a);
    if (p.is_zero()) break;
  }
  return p;
}

Subgroup subgroup_where(const FiniteRing& r, const std::function<bool(Elem)>& pred) {
  Subgroup s(r.additive());
  for (std::uint64_t x = 1; x < r.order(); ++x) {
    Elem e = static_cast<Elem>(x);
    if (!s.contains(e) && pred(e)) s.insert(e);
  }
  return s;
}

IdealLattice enumerate_ideals(const FiniteRing& r, const std::function<Subgroup(Elem)>& closure_of,
                              std::size_t cap) {
  std::vector<Subgroup> principals;
  {
    std::unordered_set<Subgroup, SubgroupHash> seen;
    for (std::uint64_t x = 1; x < r.order(); ++x) {
      Subgroup p = closure_of(static_cast<Elem>(x));
      if (seen.insert(p).second) principals.push_back(std::move(p));
    }
  }
  std::sort(principals.begin(), principals.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a < b;
  });
  IdealLattice out;
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::deque<Subgroup> queue;
  Subgroup zero(r.additive());
  seen.insert(zero);
  queue.push_back(zero);
  out.ideals.push_back(zero);
  while (!queue.empty()) {
    Subgroup cur = std::move(queue.front());
    queue.pop_front();
    for (const Subgroup& p : principals) {
      if (cur.contains(p)) continue;
      Subgroup j = sum(cur, p);
      if (seen.insert(j).second) {
        if (out.ideals.size() >= cap) {
          out.exhaustive = false;
          queue.clear();
          break;
        }
        out.ideals.push_back(j);
        queue.push_back(std::move(j));
      }
    }
  }
  std::sort(out.ideals.begin(), out.ideals.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a < b;
  });
  return out;
}

IdealLattice all_ideals(const FiniteRing& r, Side side, std::size_t cap) {
  auto gens = ring_generators(r);
  return enumerate_ideals(
      r, [&](Elem x) { return close_under(r, Subgroup::span(r.additive(), std::span<const Elem>(&x, 1)), gens, side); },
      cap);
}

// ---------------------------------------------------------------------------

Subgroup SubringRing::to_parent(const Subgroup& s) const {
  Subgroup out(carrier.group());
  for (Elem g : s.generators()) out.insert(embed[g]);
  return out;
}

Subgroup SubringRing::from_parent(const Subgroup& s) const {
  Subgroup out(ring.additive());
  intersect(s, carrier).for_each([&](Elem x) {
    Elem y = static_cast<Elem>(index_in_parent[x]);
    if (!out.contains(y)) out.insert(y);
  });
  return out;
}

SubringRing subring_ring(const FiniteRing& r, const Subgroup& s, std::string name) {
  if (!is_subring(r, s)) throw std::invalid_argument("subring_ring: subgroup is not multiplicatively closed");
  CyclicDecomposition cd = cyclic_decomposition(s);
  const AdditiveGroup& a = cd.abstract;
  const std::size_t m = a.rank();
  SubringRing out;
  out.carrier = s;
  out.embed.assign(a.order(), 0);
  Coords c(m, 0);
  for (std::uint64_t x = 1; x < a.order(); ++x) {
    std::size_t j = m;
    while (j-- > 0) {
      if (++c[j] < a.orders()[j]) break;
      c[j] = 0;
    }
    out.embed[x] = r.add(out.embed[x - a.generator(j)], cd.generators[j]);
  }
  out.index_in_parent.assign(r.order(), -1);
  for (std::uint64_t x = 0; x < a.order(); ++x) out.index_in_parent[out.embed[x]] = static_cast<std::int64_t>(x);
  RingTable t;
  t.orders = a.orders();
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Elem p = r.mul(cd.generators[i], cd.generators[j]);
      t.mul[i * m + j] = a.coords(static_cast<Elem>(out.index_in_parent[p]));
    }
  if (r.is_unital() && out.index_in_parent[*r.identity()] >= 0)
    t.unit = a.coords(static_cast<Elem>(out.index_in_parent[*r.identity()]));
  out.ring = FiniteRing::validate(std::move(name), t);
  return out;
}

Subgroup QuotientRing::image(const Subgroup& s) const {
  Subgroup out(ring.additive());
  for (Elem g : s.generators()) out.insert(projection[g]);
  return out;
}

Subgroup QuotientRing::preimage(const Subgroup& s, const FiniteRing& parent) const {
  Subgroup out = kernel;
  (void)parent;
  for (Elem g : s.generators()) out.insert(lift[g]);
  return out;
}

QuotientRing quotient_by_ideal(const FiniteRing& r, const Ideal& i, std::string name) {
  if (i.side != Side::TwoSided) throw RingError(RingError::Kind::WrongSide, "quotient needs a two-sided ideal");
  QuotientGroup qg = quotient_group(i.sub);
  const AdditiveGroup& a = qg.abstract;
  const std::size_t m = a.rank();
  QuotientRing out;
  out.kernel = i.sub;
  out.projection.resize(r.order());
  Coords buf(r.rank());
  for (std::uint64_t x = 0; x < r.order(); ++x) {
    r.additive().coords_into(static_cast<Elem>(x), buf);
    out.projection[x] = a.index(project_coords(qg, buf));
  }
  out.lift.assign(a.order(), 0);
  std::vector<bool> set(a.order(), false);
  for (std::uint64_t x = 0; x < r.order(); ++x) {
    Elem q = out.projection[x];
    if (!set[q]) {
      set[q] = true;
      out.lift[q] = static_cast<Elem>(x);
    }
  }
  RingTable t;
  t.orders = a.orders();
  t.mul.resize(m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) t.mul[p * m + q] = a.coords(out.projection[r.mul(qg.lifts[p], qg.lifts[q])]);
  if (r.is_unital()) t.unit = a.coords(out.projection[*r.identity()]);
  if (name.empty()) name = r.name() + "/I";
  out.ring = FiniteRing::validate(std::move(name), t);
  return out;
}

}  // namespace ringinv
