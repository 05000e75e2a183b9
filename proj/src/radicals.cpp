#include "ringinv/radicals.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringinv {

namespace {

Subgroup principal(const FiniteRing& r, Elem x, const std::vector<Elem>& gens, Side side) {
  return close_under(r, Subgroup::span(r.additive(), std::span<const Elem>(&x, 1)), gens, side);
}

bool element_nilpotent(const FiniteRing& r, Elem x) {
  Elem y = x;
  for (int i = 0; i < 64 && y != 0; ++i) y = r.mul(y, x);
  return y == 0;
}

}  // namespace

NilpotencyResult nilpotency_index(const FiniteRing& r, const Subgroup& s, std::size_t cap) {
  NilpotencyResult out;
  Subgroup p = s;
  for (std::size_t k = 1; k <= cap; ++k) {
    out.iterations = k;
    if (p.is_zero()) {
      out.index = k;
      return out;
    }
    Subgroup next = product(r, p, s);
    if (next == p) {
      out.stabilized = true;
      return out;
    }
    p = std::move(next);
  }
  return out;
}

NilpotencyResult nilpotency_index(const FiniteRing& r, std::size_t cap) {
  return nilpotency_index(r, Subgroup::whole(r.additive()), cap);
}

Subgroup prime_radical(const FiniteRing& r) {
  auto gens = ring_generators(r);
  return subgroup_where(r, [&](Elem x) {
    if (!element_nilpotent(r, x)) return false;
    return nilpotency_index(r, principal(r, x, gens, Side::TwoSided)).index.has_value();
  });
}

Subgroup jacobson_radical(const FiniteRing& r) {
  const auto n = r.order();
  std::vector<char> quasi_regular(n, 0);
  for (std::uint64_t y = 0; y < n; ++y)
    for (std::uint64_t z = 0; z < n; ++z) {
      Elem ye = static_cast<Elem>(y), ze = static_cast<Elem>(z);
      if (r.add(r.add(ze, ye), r.mul(ze, ye)) == 0) {
        quasi_regular[y] = 1;
        break;
      }
    }
  auto gens = ring_generators(r);
  return subgroup_where(r, [&](Elem x) {
    if (!quasi_regular[x]) return false;
    bool ok = true;
    principal(r, x, gens, Side::Left).for_each([&](Elem y) { ok = ok && quasi_regular[y]; });
    return ok;
  });
}

bool is_semiprime(const FiniteRing& r) { return prime_radical(r).is_zero(); }
bool is_semisimple_artinian(const FiniteRing& r) { return jacobson_radical(r).is_zero(); }

UdimCertificate uniform_dimension(const FiniteRing& r, Side side, std::size_t cap) {
  UdimCertificate out;
  auto gens = ring_generators(r);
  std::uint64_t limit = r.order();
  if (limit > cap + 1) {
    limit = cap + 1;
    out.exhaustive = false;
  }
  std::vector<Subgroup> principals;
  {
    std::unordered_set<Subgroup, SubgroupHash> seen;
    for (std::uint64_t x = 1; x < limit; ++x) {
      Subgroup p = principal(r, static_cast<Elem>(x), gens, side);
      if (seen.insert(p).second) principals.push_back(std::move(p));
    }
  }
  std::sort(principals.begin(), principals.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a < b;
  });
  std::vector<Subgroup> atoms;
  for (const auto& p : principals) {
    bool minimal = true;
    for (const auto& a : atoms)
      if (p.contains(a)) {
        minimal = false;
        break;
      }
    if (minimal) atoms.push_back(p);
  }
  Subgroup total(r.additive());
  for (const auto& a : atoms)
    if (intersect(total, a).is_zero()) {
      total = sum(total, a);
      out.witness.push_back(a);
    }
  out.value = out.witness.size();
  return out;
}

bool verify_udim(const FiniteRing& r, Side side, const UdimCertificate& c) {
  if (c.witness.size() != c.value) return false;
  Subgroup total(r.additive());
  std::uint64_t expected = 1;
  for (const auto& w : c.witness) {
    if (w.is_zero() || !is_ideal(r, w, side)) return false;
    total = sum(total, w);
    expected *= w.order();
    if (total.order() != expected) return false;
  }
  return true;
}

RegularElements regular_elements_quotient(const FiniteRing& r) {
  RegularElements out;
  const auto n = r.order();
  for (std::uint64_t a = 0; a < n; ++a) {
    Elem x = static_cast<Elem>(a);
    bool regular = true;
    for (std::uint64_t b = 1; b < n && regular; ++b) {
      Elem y = static_cast<Elem>(b);
      regular = r.mul(x, y) != 0 && r.mul(y, x) != 0;
    }
    if (regular) out.regular.push_back(x);
  }
  if (r.is_unital()) {
    const Elem one = *r.identity();
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) {
        Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
        if (r.mul(x, y) == one && r.mul(y, x) == one) {
          out.units.push_back(x);
          break;
        }
      }
    out.regular_are_units = out.regular == out.units;
    out.quotient = out.regular_are_units ? "Q(R) = R" : "degenerate";
  } else {
    out.quotient = "degenerate";
  }
  return out;
}

Ideal left_annihilator(const FiniteRing& r, std::span<const Elem> x) {
  return {Side::Left, subgroup_where(r, [&](Elem a) {
            for (Elem y : x)
              if (r.mul(a, y) != 0) return false;
            return true;
          })};
}

Ideal right_annihilator(const FiniteRing& r, std::span<const Elem> x) {
  return {Side::Right, subgroup_where(r, [&](Elem a) {
            for (Elem y : x)
              if (r.mul(y, a) != 0) return false;
            return true;
          })};
}

std::vector<Subgroup> composition_series(const FiniteRing& r, const Subgroup& top, const Subgroup& bottom,
                                         const std::vector<Elem>& acting, Side side) {
  if (!top.contains(bottom)) throw std::invalid_argument("composition_series: bottom is not inside top");
  std::vector<Subgroup> series{bottom};
  Subgroup cur = bottom;
  auto elems = top.elements();
  while (!(cur == top)) {
    std::optional<Subgroup> best;
    for (Elem x : elems) {
      if (cur.contains(x)) continue;
      Subgroup start = cur;
      start.insert(x);
      Subgroup p = close_under(r, std::move(start), acting, side);
      if (!best || p.order() < best->order() || (p.order() == best->order() && p < *best)) best = std::move(p);
    }
    cur = *best;
    series.push_back(cur);
  }
  return series;
}

std::size_t module_length(const FiniteRing& r, const Subgroup& top, const Subgroup& bottom,
                          const std::vector<Elem>& acting, Side side) {
  return composition_series(r, top, bottom, acting, side).size() - 1;
}

}  // namespace ringinv
