#include "ringinv/additive.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ringinv {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer overflow in lattice arithmetic");
  return static_cast<std::int64_t>(v);
}

// Returns g = gcd(a, b) > 0 with s*a + t*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace

AdditiveGroup::AdditiveGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  strides_.assign(orders_.size(), 1);
  order_ = 1;
  exponent_ = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    if (orders_[i] < 2) throw std::invalid_argument("cyclic orders must be at least 2");
    strides_[i] = order_;
    order_ *= static_cast<std::uint64_t>(orders_[i]);
    if (order_ > (std::uint64_t{1} << 31)) throw std::invalid_argument("additive group too large");
    exponent_ = std::lcm(exponent_, orders_[i]);
  }
}

Coords AdditiveGroup::coords(Elem x) const {
  Coords c(orders_.size());
  coords_into(x, c);
  return c;
}

void AdditiveGroup::coords_into(Elem x, std::span<std::int64_t> out) const {
  std::uint64_t v = x;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto d = static_cast<std::uint64_t>(orders_[i]);
    out[i] = static_cast<std::int64_t>(v % d);
    v /= d;
  }
}

Elem AdditiveGroup::index(std::span<const std::int64_t> c) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    v += strides_[i] * static_cast<std::uint64_t>(mod(c[i], orders_[i]));
  return static_cast<Elem>(v);
}

Elem AdditiveGroup::add(Elem a, Elem b) const {
  std::uint64_t va = a, vb = b, out = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto d = static_cast<std::uint64_t>(orders_[i]);
    std::uint64_t s = va % d + vb % d;
    if (s >= d) s -= d;
    out += s * strides_[i];
    va /= d;
    vb /= d;
  }
  return static_cast<Elem>(out);
}

Elem AdditiveGroup::neg(Elem a) const {
  std::uint64_t va = a, out = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto d = static_cast<std::uint64_t>(orders_[i]);
    std::uint64_t c = va % d;
    out += (c == 0 ? 0 : d - c) * strides_[i];
    va /= d;
  }
  return static_cast<Elem>(out);
}

Elem AdditiveGroup::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem AdditiveGroup::scale(std::int64_t n, Elem a) const {
  std::uint64_t va = a, out = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto d = orders_[i];
    auto c = static_cast<std::int64_t>(va % static_cast<std::uint64_t>(d));
    out += static_cast<std::uint64_t>(mod(checked(static_cast<__int128>(mod(n, d)) * c), d)) * strides_[i];
    va /= static_cast<std::uint64_t>(d);
  }
  return static_cast<Elem>(out);
}

std::int64_t AdditiveGroup::element_order(Elem a) const {
  std::uint64_t va = a;
  std::int64_t o = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    auto d = orders_[i];
    auto c = static_cast<std::int64_t>(va % static_cast<std::uint64_t>(d));
    o = std::lcm(o, d / std::gcd(c, d));
    va /= static_cast<std::uint64_t>(d);
  }
  return o;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(const AdditiveGroup& g) : group_(g) {
  const std::size_t k = g.rank();
  rows_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) rows_[i * k + i] = g.orders()[i];
  order_ = 1;
}

Subgroup Subgroup::whole(const AdditiveGroup& g) {
  Subgroup s(g);
  const std::size_t k = g.rank();
  for (std::size_t i = 0; i < k; ++i) s.rows_[i * k + i] = 1;
  s.order_ = g.order();
  return s;
}

Subgroup Subgroup::span(const AdditiveGroup& g, std::span<const Elem> gens) {
  Subgroup s(g);
  for (Elem x : gens) s.insert(x);
  return s;
}

bool Subgroup::insert(Elem x) {
  if (x == 0) return false;
  return insert_coords(group_.coords(x));
}

bool Subgroup::insert_coords(Coords v) {
  const std::size_t k = group_.rank();
  const auto& d = group_.orders();
  for (std::size_t j = 0; j < k; ++j) v[j] = mod(v[j], d[j]);
  bool changed = false;
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t a = v[i];
    if (a == 0) continue;
    std::int64_t* r = rows_.data() + i * k;
    std::int64_t h = r[i];
    if (a % h == 0) {
      std::int64_t q = a / h;
      for (std::size_t j = i; j < k; ++j) v[j] = mod(checked(v[j] - static_cast<__int128>(q) * r[j]), d[j]);
      continue;
    }
    std::int64_t s = 0, t = 0;
    std::int64_t g = ext_gcd(h, a, s, t);
    std::int64_t hg = h / g, ag = a / g;
    for (std::size_t j = i; j < k; ++j) {
      std::int64_t nr = checked(static_cast<__int128>(s) * r[j] + static_cast<__int128>(t) * v[j]);
      std::int64_t nv = checked(static_cast<__int128>(hg) * v[j] - static_cast<__int128>(ag) * r[j]);
      r[j] = j == i ? nr : mod(nr, d[j]);
      v[j] = j == i ? 0 : mod(nv, d[j]);
    }
    changed = true;
  }
  if (changed) reduce();
  return changed;
}

void Subgroup::reduce() {
  const std::size_t k = group_.rank();
  const auto& d = group_.orders();
  for (std::size_t c = 0; c < k; ++c) {
    const std::int64_t* rc = rows_.data() + c * k;
    std::int64_t h = rc[c];
    for (std::size_t j = 0; j < c; ++j) {
      std::int64_t* rj = rows_.data() + j * k;
      std::int64_t q = rj[c] >= 0 ? rj[c] / h : -((-rj[c] + h - 1) / h);
      if (q == 0) continue;
      for (std::size_t col = c; col < k; ++col) {
        std::int64_t val = checked(rj[col] - static_cast<__int128>(q) * rc[col]);
        rj[col] = col == c ? val : mod(val, d[col]);
      }
    }
  }
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < k; ++i) o *= static_cast<std::uint64_t>(d[i] / rows_[i * k + i]);
  order_ = o;
}

bool Subgroup::absorb(const Subgroup& other) {
  bool changed = false;
  for (Elem g : other.generators()) changed |= insert(g);
  return changed;
}

bool Subgroup::contains_coords(std::span<const std::int64_t> in) const {
  const std::size_t k = group_.rank();
  const auto& d = group_.orders();
  Coords v(in.begin(), in.end());
  for (std::size_t j = 0; j < k; ++j) v[j] = mod(v[j], d[j]);
  for (std::size_t i = 0; i < k; ++i) {
    if (v[i] == 0) continue;
    const std::int64_t* r = rows_.data() + i * k;
    if (v[i] % r[i] != 0) return false;
    std::int64_t q = v[i] / r[i];
    for (std::size_t j = i; j < k; ++j) v[j] = mod(v[j] - q * r[j], d[j]);
  }
  return true;
}

bool Subgroup::contains(Elem x) const {
  if (x == 0) return true;
  if (order_ == group_.order()) return true;
  if (order_ == 1) return false;
  return contains_coords(group_.coords(x));
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.order_ > order_ || order_ % other.order_ != 0) return false;
  for (Elem g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<Elem> Subgroup::generators() const {
  const std::size_t k = group_.rank();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < k; ++i)
    if (rows_[i * k + i] != group_.orders()[i]) out.push_back(group_.index(row(i)));
  return out;
}

void Subgroup::for_each(const std::function<void(Elem)>& f) const {
  const std::size_t k = group_.rank();
  const auto& d = group_.orders();
  std::vector<std::int64_t> counts(k), digit(k, 0);
  for (std::size_t i = 0; i < k; ++i) counts[i] = d[i] / rows_[i * k + i];
  Coords v(k, 0);
  while (true) {
    f(group_.index(v));
    std::size_t i = k;
    while (i-- > 0) {
      const std::int64_t* r = rows_.data() + i * k;
      if (++digit[i] < counts[i]) {
        for (std::size_t j = i; j < k; ++j) v[j] = mod(v[j] + r[j], d[j]);
        break;
      }
      // wrap: subtract (counts[i] - 1) copies of the row
      for (std::size_t j = i; j < k; ++j) v[j] = mod(v[j] - (counts[i] - 1) * r[j], d[j]);
      digit[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  for_each([&](Elem x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Subgroup::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : rows_) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

Subgroup sum(const Subgroup& a, const Subgroup& b) {
  if (a.order() >= b.order()) {
    Subgroup s = a;
    s.absorb(b);
    return s;
  }
  Subgroup s = b;
  s.absorb(a);
  return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& large = a.order() <= b.order() ? b : a;
  Subgroup out(a.group());
  if (large.contains(small)) return small;
  small.for_each([&](Elem x) {
    if (!out.contains(x) && large.contains(x)) out.insert(x);
  });
  return out;
}

// ---------------------------------------------------------------------------

SmithForm smith_normal_form(std::vector<std::int64_t> a, std::size_t n) {
  SmithForm out;
  out.v.assign(n * n, 0);
  out.v_inv.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) out.v[i * n + i] = out.v_inv[i * n + i] = 1;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };
  auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // row_dst -= q row_src
    for (std::size_t j = 0; j < n; ++j) at(dst, j) = checked(at(dst, j) - static_cast<__int128>(q) * at(src, j));
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // col_dst -= q col_src
    for (std::size_t i = 0; i < n; ++i) at(i, dst) = checked(at(i, dst) - static_cast<__int128>(q) * at(i, src));
    for (std::size_t i = 0; i < n; ++i)
      out.v[i * n + dst] = checked(out.v[i * n + dst] - static_cast<__int128>(q) * out.v[i * n + src]);
    for (std::size_t j = 0; j < n; ++j)
      out.v_inv[src * n + j] = checked(out.v_inv[src * n + j] + static_cast<__int128>(q) * out.v_inv[dst * n + j]);
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(at(x, j), at(y, j));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < n; ++i) std::swap(at(i, x), at(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(out.v[i * n + x], out.v[i * n + y]);
    for (std::size_t j = 0; j < n; ++j) std::swap(out.v_inv[x * n + j], out.v_inv[y * n + j]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (at(i, j) != 0 && (bi == n || std::llabs(at(i, j)) < std::llabs(at(bi, bj)))) bi = i, bj = j;
      if (bi == n) throw std::invalid_argument("smith_normal_form: singular matrix");
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      const std::int64_t p = at(t, t);
      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (at(i, t) == 0) continue;
        row_axpy(i, t, at(i, t) / p);
        dirty |= at(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (at(t, j) == 0) continue;
        col_axpy(j, t, at(t, j) / p);
        dirty |= at(t, j) != 0;
      }
      if (dirty) continue;
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (at(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = 0; j < n; ++j) at(t, j) = checked(static_cast<__int128>(at(t, j)) + at(bad, j));
    }
    if (at(t, t) < 0)
      for (std::size_t j = 0; j < n; ++j) at(t, j) = -at(t, j);
  }
  out.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = at(i, i);
  return out;
}

CyclicDecomposition cyclic_decomposition(const Subgroup& s) {
  const AdditiveGroup& g = s.group();
  const std::size_t k = g.rank();
  const auto& d = g.orders();
  // X with X M = diag(d), M = HNF rows.
  std::vector<std::int64_t> x(k * k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      __int128 acc = (c == r ? d[r] : 0);
      for (std::size_t i = 0; i < c; ++i) acc -= static_cast<__int128>(x[r * k + i]) * s.row(i)[c];
      std::int64_t piv = s.pivot(c);
      if (acc % piv != 0) throw std::logic_error("cyclic_decomposition: lattice does not contain D");
      x[r * k + c] = checked(acc / piv);
    }
  }
  SmithForm sf = k == 0 ? SmithForm{} : smith_normal_form(std::move(x), k);
  std::vector<std::int64_t> orders;
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (sf.diag[i] == 1) continue;
    Coords v(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t coef = sf.v_inv[i * k + j];
      if (coef == 0) continue;
      for (std::size_t c = 0; c < k; ++c)
        v[c] = mod(checked(v[c] + static_cast<__int128>(mod(coef, d[c])) * s.row(j)[c]), d[c]);
    }
    orders.push_back(sf.diag[i]);
    gens.push_back(g.index(v));
  }
  return {AdditiveGroup(std::move(orders)), std::move(gens)};
}

QuotientGroup quotient_group(const Subgroup& s) {
  const AdditiveGroup& g = s.group();
  const std::size_t k = g.rank();
  const auto& d = g.orders();
  std::vector<std::int64_t> m(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = s.row(i)[j];
  SmithForm sf = k == 0 ? SmithForm{} : smith_normal_form(std::move(m), k);
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < k; ++i)
    if (sf.diag[i] != 1) {
      kept.push_back(i);
      orders.push_back(sf.diag[i]);
    }
  QuotientGroup q;
  q.abstract = AdditiveGroup(orders);
  const std::size_t mm = kept.size();
  q.projection.assign(k * mm, 0);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < mm; ++c) q.projection[r * mm + c] = mod(sf.v[r * k + kept[c]], orders[c]);
  for (std::size_t c = 0; c < mm; ++c) {
    Coords v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = mod(sf.v_inv[kept[c] * k + j], d[j]);
    q.lifts.push_back(g.index(v));
  }
  return q;
}

Coords project_coords(const QuotientGroup& q, std::span<const std::int64_t> v) {
  const std::size_t mm = q.abstract.rank();
  const std::size_t k = v.size();
  Coords out(mm, 0);
  for (std::size_t c = 0; c < mm; ++c) {
    __int128 acc = 0;
    for (std::size_t r = 0; r < k; ++r) acc += static_cast<__int128>(v[r]) * q.projection[r * mm + c];
    out[c] = static_cast<std::int64_t>(acc % q.abstract.orders()[c]);
  }
  return out;
}

}  // namespace ringinv
