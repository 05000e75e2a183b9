#pragma once
// Brute-force oracles shared by the unit tests. They work on explicit element
// sets and never touch the lattice machinery under test.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ringinv/ring.hpp"

namespace testsupport {

using ringinv::Elem;
using ringinv::FiniteRing;

inline std::set<Elem> additive_closure(const FiniteRing& r, std::set<Elem> s) {
  s.insert(0);
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(r.add(a, b)).second) grown = true;
  }
  return s;
}

/// Ideal generated by `gens` as an element set: Z-span closed under the
/// requested multiplications by every ring element.
inline std::set<Elem> brute_ideal(const FiniteRing& r, const std::vector<Elem>& gens, bool left, bool right) {
  std::set<Elem> s(gens.begin(), gens.end());
  s = additive_closure(r, s);
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem x : cur)
      for (std::uint64_t a = 0; a < r.order(); ++a) {
        if (left && !s.count(r.mul(static_cast<Elem>(a), x))) grown = true, s.insert(r.mul(static_cast<Elem>(a), x));
        if (right && !s.count(r.mul(x, static_cast<Elem>(a)))) grown = true, s.insert(r.mul(x, static_cast<Elem>(a)));
      }
    s = additive_closure(r, s);
  }
  return s;
}

inline std::vector<Elem> as_vector(const std::set<Elem>& s) { return {s.begin(), s.end()}; }

inline std::vector<Elem> all_elements(const FiniteRing& r) {
  std::vector<Elem> v(r.order());
  for (std::uint64_t i = 0; i < r.order(); ++i) v[i] = static_cast<Elem>(i);
  return v;
}

/// Nilpotency index by literal products of element sets: least k with every
/// k-fold product of elements of s equal to zero, or 0 if none up to cap.
inline std::size_t brute_nilpotency(const FiniteRing& r, const std::set<Elem>& s, std::size_t cap = 16) {
  std::set<Elem> p = s;  // s^1 as element set (closed additively below)
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p.size() == 1 && *p.begin() == 0) return k;
    std::set<Elem> next;
    for (Elem a : p)
      for (Elem b : s) next.insert(r.mul(a, b));
    p = additive_closure(r, next);
  }
  return 0;
}

}  // namespace testsupport
