#include "ringinv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace ringinv {

GAction GAction::of(AutomorphismGroup g) {
  GAction a;
  a.fixed = fixed_ring(g);
  a.group = std::move(g);
  return a;
}

Subgroup fixed_ring(const AutomorphismGroup& g) { return fixed_subgroup(g, g.all_indices()); }

Elem trace(const AutomorphismGroup& g, Elem r) {
  Elem t = 0;
  for (const auto& a : g.elements()) t = g.ring().add(t, a(r));
  return t;
}

Subgroup trace_image(const AutomorphismGroup& g, std::span<const Elem> x) {
  Subgroup out(g.ring().additive());
  for (Elem e : x) out.insert(trace(g, e));
  return out;
}

Subgroup trace_image(const AutomorphismGroup& g, const Subgroup& x) {
  auto gens = x.generators();
  return trace_image(g, gens);
}

SubringRing fixed_subring(const GAction& a) { return subring_ring(a.ring(), a.fixed, a.ring().name() + "^G"); }

// ---------------------------------------------------------------------------

RelativeTrace::RelativeTrace(const AutomorphismGroup& g, SubgroupIndices n) : ring_(g.ring()) {
  if (!g.is_subgroup(n) || !g.is_normal(n)) throw InvariantError(InvariantError::Kind::NotNormal, "N is not normal");
  cosets_ = ringinv::cosets(g, n);
  domain_ = fixed_subgroup(g, n);
  for (auto rep : cosets_.representatives) reps_.push_back(g[rep]);
  auto gens = domain_.generators();
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& rep = reps_[cosets_.coset_of[i]];
    for (Elem x : gens)
      if (g[i](x) != rep(x)) throw std::logic_error("coset representatives disagree on R^N");
  }
}

Elem RelativeTrace::operator()(Elem r) const {
  if (!domain_.contains(r)) throw InvariantError(InvariantError::Kind::NotInFixedRing, "element is not fixed by N");
  Elem t = 0;
  for (const auto& a : reps_) t = ring_.add(t, a(r));
  return t;
}

Subgroup RelativeTrace::image(const Subgroup& x) const {
  Subgroup out(ring_.additive());
  for (Elem e : x.generators()) out.insert((*this)(e));
  return out;
}

// ---------------------------------------------------------------------------

Ideal torsion_ideal(const FiniteRing& r, std::int64_t n) {
  auto primes = prime_factors(n);
  return {Side::TwoSided, subgroup_where(r, [&](Elem x) {
            std::int64_t o = r.additive().element_order(x);
            for (auto p : primes)
              while (o % p == 0) o /= p;
            return o == 1;
          })};
}

bool is_torsion_free(const Subgroup& s, std::int64_t n) {
  return std::gcd(static_cast<std::int64_t>(s.order()), n) == 1;
}

std::vector<std::int64_t> BadPrimeProfile::list() const {
  std::vector<std::int64_t> out;
  for (const auto& b : primes) out.push_back(b.p);
  return out;
}

BadPrimeProfile bad_primes(const GAction& a, std::size_t d_cap) {
  BadPrimeProfile out;
  const FiniteRing& r = a.ring();
  for (auto p : prime_factors(static_cast<std::int64_t>(a.n()))) {
    if (r.order() % static_cast<std::uint64_t>(p) != 0) continue;
    BadPrime b;
    b.p = p;
    b.d_cap = d_cap;
    b.torsion = torsion_ideal(r, p).sub;
    b.complement = p_normal_complement(a.group, p);
    if (b.complement) {
      RelativeTrace t(a.group, *b.complement);
      b.complement_fixed = t.domain();
      b.relative_trace_image = t.image(t.domain());
      auto nil = nilpotency_index(r, *b.relative_trace_image, d_cap);
      b.d = nil.index;
      b.never_nilpotent = nil.stabilized;
    }
    out.primes.push_back(std::move(b));
  }
  return out;
}

Subgroup extend(const FiniteRing& r, const Subgroup& j, Side side) { return generated_ideal(r, j, side).sub; }

Subgroup restrict(const GAction& a, const Subgroup& i) { return intersect(i, a.fixed); }

// ---------------------------------------------------------------------------

Subgroup Splitting::image(const Subgroup& s) const {
  Subgroup out(s.group());
  for (Elem x : s.generators()) out.insert(projection[x]);
  return out;
}

namespace {

bool is_bimodule(const FiniteRing& r, const Subgroup& b, const std::vector<Elem>& acting) {
  for (Elem x : b.generators())
    for (Elem f : acting)
      if (!b.contains(r.mul(f, x)) || !b.contains(r.mul(x, f))) return false;
  return true;
}

bool is_g_stable(const AutomorphismGroup& g, const Subgroup& b) {
  for (const auto& a : g.generators())
    for (Elem x : b.generators())
      if (!b.contains(a(x))) return false;
  return true;
}

}  // namespace

std::optional<Splitting> splitting_from_complement(const GAction& a, const Subgroup& b) {
  const FiniteRing& r = a.ring();
  if (b.order() * a.fixed.order() != r.order() || !intersect(b, a.fixed).is_zero()) return std::nullopt;
  if (!is_bimodule(r, b, a.fixed.generators())) return std::nullopt;
  Splitting s;
  s.complement = b;
  s.g_invariant = is_g_stable(a.group, b);
  s.projection.assign(r.order(), 0);
  auto fe = a.fixed.elements();
  b.for_each([&](Elem y) {
    for (Elem f : fe) s.projection[r.add(f, y)] = f;
  });
  return s;
}

bool order_invertible(const GAction& a) {
  return std::gcd(static_cast<std::int64_t>(a.n()), a.ring().additive().exponent()) == 1;
}

Splitting averaging_idempotent(const GAction& a) {
  if (!order_invertible(a))
    throw InvariantError(InvariantError::Kind::NotInvertible, "|G| is not invertible on R");
  const FiniteRing& r = a.ring();
  const std::int64_t e = r.additive().exponent();
  const auto n = static_cast<std::int64_t>(a.n() % static_cast<std::uint64_t>(e));
  std::int64_t inv = 0;
  for (std::int64_t c = 0; c < e; ++c)
    if ((c * n) % e == 1 % e) {
      inv = c;
      break;
    }
  Splitting s;
  s.projection.assign(r.order(), 0);
  Subgroup b(r.additive());
  for (std::uint64_t x = 0; x < r.order(); ++x) {
    Elem xe = static_cast<Elem>(x);
    s.projection[x] = r.scale(inv, trace(a.group, xe));
    if (x > 0 && !b.contains(r.sub(xe, s.projection[x]))) b.insert(r.sub(xe, s.projection[x]));
  }
  s.complement = b;
  s.g_invariant = is_g_stable(a.group, b);
  for (std::uint64_t x = 0; x < r.order(); ++x) {
    if (s.projection[s.projection[x]] != s.projection[x] || !a.fixed.contains(s.projection[x]))
      throw std::logic_error("averaging map is not a projection onto R^G");
  }
  if (!splitting_from_complement(a, b)) throw std::logic_error("averaging complement is not a bimodule complement");
  return s;
}

SplittingSearch splitting_search(const GAction& a, std::size_t max_found, std::size_t node_budget) {
  const FiniteRing& r = a.ring();
  const Subgroup& f = a.fixed;
  const auto acting = f.generators();
  const auto fixed_elems = f.elements();
  SplittingSearch out;
  std::unordered_set<Subgroup, SubgroupHash> recorded;
  std::size_t nodes = 0;

  for (bool invariant : {true, false}) {
    auto close = [&](Subgroup m) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (Elem x : m.generators()) {
          for (Elem y : acting) {
            changed |= m.insert(r.mul(y, x));
            changed |= m.insert(r.mul(x, y));
          }
          if (invariant)
            for (const auto& g : a.group.generators()) changed |= m.insert(g(x));
        }
      }
      return m;
    };
    std::unordered_set<Subgroup, SubgroupHash> visited;
    std::vector<Subgroup> pass;
    bool stop = false;
    std::function<void(const Subgroup&)> dfs = [&](const Subgroup& m) {
      if (stop) return;
      if (m.order() * f.order() == r.order()) {
        if (!recorded.count(m)) pass.push_back(m);
        return;
      }
      Subgroup covered = sum(m, f);
      Elem y = 1;
      while (covered.contains(y)) ++y;
      for (Elem c : fixed_elems) {
        if (++nodes > node_budget || recorded.size() + pass.size() >= max_found) {
          out.exhaustive = false;
          stop = true;
          return;
        }
        Subgroup next = m;
        next.insert(r.sub(y, c));
        next = close(std::move(next));
        if (!intersect(next, f).is_zero() || !visited.insert(next).second) continue;
        dfs(next);
        if (stop) return;
      }
    };
    Subgroup start = close(Subgroup(r.additive()));
    if (intersect(start, f).is_zero()) dfs(start);
    std::sort(pass.begin(), pass.end());
    for (auto& m : pass) {
      recorded.insert(m);
      auto s = splitting_from_complement(a, m);
      if (!s) throw std::logic_error("splitting search produced an invalid complement");
      out.found.push_back(std::move(*s));
    }
    if (stop) break;
  }
  return out;
}

IdealLattice invariant_ideals(const GAction& a, Side side, std::size_t order_cap, std::size_t count_cap,
                              std::uint64_t seed, std::size_t samples) {
  const FiniteRing& r = a.ring();
  auto orbit_ideal = [&](Elem x) {
    std::vector<Elem> orbit;
    for (const auto& g : a.group.elements()) orbit.push_back(g(x));
    return generated_ideal(r, orbit, side).sub;
  };
  if (r.order() <= order_cap) return enumerate_ideals(r, orbit_ideal, count_cap);
  IdealLattice out;
  out.exhaustive = false;
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, r.order() - 1);
  Subgroup zero(r.additive());
  seen.insert(zero);
  out.ideals.push_back(zero);
  std::vector<Subgroup> principals;
  for (std::size_t i = 0; i < samples; ++i) {
    Subgroup p = orbit_ideal(static_cast<Elem>(pick(rng)));
    if (seen.insert(p).second) {
      out.ideals.push_back(p);
      principals.push_back(p);
    }
  }
  for (std::size_t i = 0; i < principals.size(); ++i)
    for (std::size_t j = i + 1; j < principals.size(); ++j) {
      Subgroup s = sum(principals[i], principals[j]);
      if (seen.insert(s).second) out.ideals.push_back(s);
    }
  std::sort(out.ideals.begin(), out.ideals.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.order() != y.order() ? x.order() < y.order() : x < y;
  });
  return out;
}

ProperSplittingCheck is_proper_splitting(const GAction& a, const Splitting& s, const IdealLattice& invariant) {
  ProperSplittingCheck out;
  out.exhaustive = invariant.exhaustive;
  for (const auto& i : invariant.ideals) {
    Subgroup ei = s.image(i);
    Subgroup ir = intersect(i, a.fixed);
    bool fwd = ir.contains(ei);
    bool rev = ei.contains(ir);
    if (!fwd && out.proper) out.witness = i;
    out.proper = out.proper && fwd;
    out.reverse = out.reverse && rev;
    out.equality = out.equality && fwd && rev;
    ++out.checked;
  }
  return out;
}

CentralizerNormalizer centralizer_normalizer(const FiniteRing& b, const Subgroup& a) {
  CentralizerNormalizer out;
  auto gens = a.generators();
  out.centralizer = subgroup_where(b, [&](Elem x) {
    for (Elem y : gens)
      if (b.mul(x, y) != b.mul(y, x)) return false;
    return true;
  });
  for (std::uint64_t v = 0; v < b.order(); ++v) {
    Elem x = static_cast<Elem>(v);
    Subgroup left(b.additive()), right(b.additive());
    for (Elem y : gens) {
      left.insert(b.mul(x, y));
      right.insert(b.mul(y, x));
    }
    if (left == right) out.normalizer.push_back(x);
  }
  for (Elem x : out.normalizer) {
    if (!unit_inverse(b, x)) continue;
    out.normalizer_units.push_back(x);
    if (out.centralizer.contains(x)) out.centralizer_units.push_back(x);
  }
  return out;
}

NondegenerateTrace nondegenerate_trace_check(const GAction& a, const IdealLattice& left, const IdealLattice& right) {
  NondegenerateTrace out;
  out.fixed_semiprime = is_semiprime(fixed_subring(a).ring);
  out.exhaustive = left.exhaustive && right.exhaustive;
  for (auto [lattice, side] : {std::pair{&left, Side::Left}, std::pair{&right, Side::Right}}) {
    for (auto it = lattice->ideals.rbegin(); it != lattice->ideals.rend(); ++it) {
      const Subgroup& i = *it;
      if (i.is_zero()) continue;
      if (trace_image(a.group, i).is_zero()) {
        out.traces_nonzero = false;
        out.witness = i;
        out.witness_side = side;
        return out;
      }
    }
  }
  return out;
}

NondegenerateTrace nondegenerate_trace_check(const GAction& a) {
  return nondegenerate_trace_check(a, invariant_ideals(a, Side::Left), invariant_ideals(a, Side::Right));
}

}  // namespace ringinv
