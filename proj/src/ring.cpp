#include "ringinv/ring.hpp"

#include <mutex>
#include <numeric>

namespace ringinv {

const char* to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "twosided";
  }
  return "?";
}

namespace {
constexpr std::uint64_t kTableLimit = 4096;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

struct FiniteRing::Data {
  std::string name;
  AdditiveGroup group;
  std::vector<Coords> prod;  // k*k
  std::vector<Elem> prod_elem;
  std::optional<Elem> identity;

  // Multiplication table, rows filled on first use (single writer per row).
  mutable std::once_flag table_flag;
  mutable std::vector<std::uint16_t> table;
  mutable std::unique_ptr<std::once_flag[]> row_flags;

  Coords mul_coords(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
    const std::size_t k = group.rank();
    const auto& d = group.orders();
    Coords out(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (b[j] == 0) continue;
        std::int64_t c = a[i] * b[j];
        const Coords& p = prod[i * k + j];
        for (std::size_t l = 0; l < k; ++l)
          if (p[l] != 0) out[l] = (out[l] + (c % d[l]) * p[l]) % d[l];
      }
    }
    return out;
  }

  Elem mul_direct(Elem a, Elem b) const {
    return group.index(mul_coords(group.coords(a), group.coords(b)));
  }

  void fill_row(Elem a) const {
    const std::size_t k = group.rank();
    const std::uint64_t n = group.order();
    std::vector<Elem> w(k);
    Coords ca = group.coords(a);
    for (std::size_t j = 0; j < k; ++j) {
      Coords ej(k, 0);
      ej[j] = 1;
      w[j] = group.index(mul_coords(ca, ej));
    }
    std::uint16_t* row = table.data() + static_cast<std::uint64_t>(a) * n;
    row[0] = 0;
    Coords cb(k, 0);
    for (std::uint64_t b = 1; b < n; ++b) {
      // increment cb; the lowest-significance coordinate that does not wrap
      std::size_t j = k;
      while (j-- > 0) {
        if (++cb[j] < group.orders()[j]) break;
        cb[j] = 0;
      }
      Elem prev = static_cast<Elem>(b - group.generator(j));
      row[b] = static_cast<std::uint16_t>(group.add(row[prev], w[j]));
    }
  }

  Elem mul(Elem a, Elem b) const {
    const std::uint64_t n = group.order();
    if (n > kTableLimit) return mul_direct(a, b);
    std::call_once(table_flag, [&] {
      table.assign(n * n, 0);
      row_flags.reset(new std::once_flag[n]);
    });
    std::call_once(row_flags[a], [&] { fill_row(a); });
    return table[static_cast<std::uint64_t>(a) * n + b];
  }
};

FiniteRing::FiniteRing() : d_(std::make_shared<Data>()) {}

const std::string& FiniteRing::name() const { return d_->name; }
const AdditiveGroup& FiniteRing::additive() const { return d_->group; }
const std::optional<Elem>& FiniteRing::identity() const { return d_->identity; }
Elem FiniteRing::mul(Elem a, Elem b) const { return d_->mul(a, b); }
Coords FiniteRing::mul_coords(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  return d_->mul_coords(a, b);
}
Elem FiniteRing::generator_product(std::size_t i, std::size_t j) const { return d_->prod_elem[i * rank() + j]; }

FiniteRing FiniteRing::renamed(std::string name) const {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->group = d_->group;
  d->prod = d_->prod;
  d->prod_elem = d_->prod_elem;
  d->identity = d_->identity;
  return FiniteRing(std::move(d));
}

RingTable FiniteRing::table() const {
  RingTable t;
  t.orders = additive().orders();
  t.mul = d_->prod;
  if (d_->identity) t.unit = coords(*d_->identity);
  return t;
}

FiniteRing FiniteRing::validate(std::string name, const RingTable& table) {
  AdditiveGroup g;
  try {
    g = AdditiveGroup(table.orders);
  } catch (const std::invalid_argument& e) {
    throw RingError(RingError::Kind::BadDimensions, e.what());
  }
  const std::size_t k = g.rank();
  if (table.mul.size() != k * k)
    throw RingError(RingError::Kind::BadDimensions, "expected " + std::to_string(k * k) + " products");
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->group = g;
  d->prod.resize(k * k);
  d->prod_elem.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Coords& c = table.mul[i * k + j];
      if (c.size() != k)
        throw RingError(RingError::Kind::BadDimensions, "product has wrong length", {i, j});
      Coords r(k);
      for (std::size_t l = 0; l < k; ++l) r[l] = mod(c[l], g.orders()[l]);
      Elem e = g.index(r);
      if (g.scale(g.orders()[i], e) != 0 || g.scale(g.orders()[j], e) != 0)
        throw RingError(RingError::Kind::IllDefined,
                        "ill-defined product e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1), {i, j});
      d->prod[i * k + j] = std::move(r);
      d->prod_elem[i * k + j] = e;
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Coords el(k, 0);
        el[l] = 1;
        Coords ei(k, 0);
        ei[i] = 1;
        Coords lhs = d->mul_coords(d->prod[i * k + j], el);
        Coords rhs = d->mul_coords(ei, d->prod[j * k + l]);
        if (lhs != rhs)
          throw RingError(RingError::Kind::NonAssociative,
                          "(e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + ")e" + std::to_string(l + 1) +
                              " != e" + std::to_string(i + 1) + "(e" + std::to_string(j + 1) + "e" +
                              std::to_string(l + 1) + ")",
                          {i, j, l});
      }
  auto is_identity = [&](Elem u) {
    for (std::size_t i = 0; i < k; ++i) {
      Elem e = g.generator(i);
      if (d->mul_direct(u, e) != e || d->mul_direct(e, u) != e) return false;
    }
    return true;
  };
  if (table.unit) {
    if (table.unit->size() != k) throw RingError(RingError::Kind::BadDimensions, "unit has wrong length");
    Elem u = g.index(*table.unit);
    if (!is_identity(u)) throw RingError(RingError::Kind::NotIdentity, "claimed unit is not a two-sided identity");
    d->identity = u;
  } else {
    for (std::uint64_t u = 0; u < g.order(); ++u)
      if (is_identity(static_cast<Elem>(u))) {
        d->identity = static_cast<Elem>(u);
        break;
      }
  }
  return FiniteRing(std::move(d));
}

// ---------------------------------------------------------------------------

FiniteRing cyclic_ring(std::int64_t n) {
  RingTable t{{n}, {{1}}, Coords{1}};
  return FiniteRing::validate("Z" + std::to_string(n), t);
}

FiniteRing zero_mult_ring(const AdditiveGroup& a, std::string name) {
  const std::size_t k = a.rank();
  RingTable t{a.orders(), std::vector<Coords>(k * k, Coords(k, 0)), std::nullopt};
  if (name.empty()) {
    name = "zm";
    for (auto d : a.orders()) name += "_" + std::to_string(d);
  }
  return FiniteRing::validate(std::move(name), t);
}

FiniteRing polynomial_quotient_ring(std::int64_t n, const std::vector<std::int64_t>& lower, std::string name) {
  const std::size_t m = lower.size();
  // x^a for a < 2m-1 reduced mod f
  std::vector<Coords> powers(2 * m, Coords(m, 0));
  for (std::size_t a = 0; a < m; ++a) powers[a][a] = 1;
  for (std::size_t a = m; a < 2 * m; ++a) {
    // x^a = x * x^{a-1}
    Coords prev = powers[a - 1];
    Coords cur(m, 0);
    for (std::size_t i = 0; i + 1 < m; ++i) cur[i + 1] = prev[i];
    std::int64_t top = prev[m - 1];
    for (std::size_t i = 0; i < m; ++i) cur[i] = mod(cur[i] - top * lower[i], n);
    powers[a] = cur;
  }
  RingTable t;
  t.orders.assign(m, n);
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t.mul[i * m + j] = powers[i + j];
  Coords one(m, 0);
  one[0] = 1;
  t.unit = one;
  if (name.empty()) name = "Z" + std::to_string(n) + "[x]/f";
  return FiniteRing::validate(std::move(name), t);
}

FiniteRing direct_product(const std::vector<FiniteRing>& rings, std::string name) {
  if (rings.empty()) throw std::invalid_argument("direct_product of an empty list");
  if (rings.size() == 1) return name.empty() ? rings[0] : rings[0].renamed(std::move(name));
  RingTable t;
  std::vector<std::size_t> offset;
  std::size_t k = 0;
  for (const auto& r : rings) {
    offset.push_back(k);
    k += r.rank();
    for (auto d : r.additive().orders()) t.orders.push_back(d);
  }
  t.mul.assign(k * k, Coords(k, 0));
  bool unital = true;
  Coords unit(k, 0);
  for (std::size_t f = 0; f < rings.size(); ++f) {
    const FiniteRing& r = rings[f];
    const std::size_t kr = r.rank(), o = offset[f];
    for (std::size_t i = 0; i < kr; ++i)
      for (std::size_t j = 0; j < kr; ++j) {
        Coords p = r.coords(r.generator_product(i, j));
        for (std::size_t l = 0; l < kr; ++l) t.mul[(o + i) * k + (o + j)][o + l] = p[l];
      }
    if (r.is_unital()) {
      Coords u = r.coords(*r.identity());
      for (std::size_t l = 0; l < kr; ++l) unit[o + l] = u[l];
    } else {
      unital = false;
    }
  }
  if (unital) t.unit = unit;
  if (name.empty()) {
    for (std::size_t f = 0; f < rings.size(); ++f) name += (f ? "x" : "") + rings[f].name();
  }
  return FiniteRing::validate(std::move(name), t);
}

Elem product_element(const FiniteRing& product, const std::vector<FiniteRing>& factors,
                     const std::vector<Elem>& parts) {
  Coords c;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    Coords p = factors[f].coords(parts[f]);
    c.insert(c.end(), p.begin(), p.end());
  }
  return product.element(c);
}

FiniteRing matrix_ring(const FiniteRing& r, std::size_t n, std::string name) {
  if (!r.is_unital()) throw RingError(RingError::Kind::NotUnital, "matrix_ring needs a unital ring");
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
  const std::size_t kr = r.rank();
  const std::size_t k = n * n * kr;
  auto gi = [&](std::size_t a, std::size_t b, std::size_t i) { return (a * n + b) * kr + i; };
  RingTable t;
  for (std::size_t a = 0; a < n * n; ++a)
    for (auto d : r.additive().orders()) t.orders.push_back(d);
  t.mul.assign(k * k, Coords(k, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          if (b != c) continue;
          for (std::size_t i = 0; i < kr; ++i)
            for (std::size_t j = 0; j < kr; ++j) {
              Coords p = r.coords(r.generator_product(i, j));
              for (std::size_t l = 0; l < kr; ++l) t.mul[gi(a, b, i) * k + gi(c, e, j)][gi(a, e, l)] = p[l];
            }
        }
  Coords unit(k, 0);
  Coords one = r.coords(*r.identity());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t l = 0; l < kr; ++l) unit[gi(a, a, l)] = one[l];
  t.unit = unit;
  if (name.empty()) name = "M" + std::to_string(n) + "(" + r.name() + ")";
  return FiniteRing::validate(std::move(name), t);
}

Elem matrix_element(const FiniteRing& mat, const FiniteRing& r, std::size_t n, const std::vector<Elem>& entries) {
  Coords c;
  for (std::size_t a = 0; a < n * n; ++a) {
    Coords p = r.coords(entries[a]);
    c.insert(c.end(), p.begin(), p.end());
  }
  return mat.element(c);
}

FiniteRing group_ring(const FiniteRing& r, const std::vector<std::vector<std::size_t>>& cayley, std::string name) {
  if (!r.is_unital()) throw RingError(RingError::Kind::NotUnital, "group_ring needs a unital ring");
  const std::size_t m = cayley.size();
  std::size_t ident = m;
  for (std::size_t a = 0; a < m && ident == m; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < m; ++b) ok &= cayley[a][b] == b && cayley[b][a] == b;
    if (ok) ident = a;
  }
  if (ident == m) throw std::invalid_argument("Cayley table has no identity");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) throw std::invalid_argument("Cayley table not associative");
  const std::size_t kr = r.rank();
  const std::size_t k = kr * m;
  auto gi = [&](std::size_t i, std::size_t h) { return i * m + h; };
  RingTable t;
  for (std::size_t i = 0; i < kr; ++i)
    for (std::size_t h = 0; h < m; ++h) t.orders.push_back(r.additive().orders()[i]);
  t.mul.assign(k * k, Coords(k, 0));
  for (std::size_t i = 0; i < kr; ++i)
    for (std::size_t j = 0; j < kr; ++j) {
      Coords p = r.coords(r.generator_product(i, j));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t l = 0; l < kr; ++l) t.mul[gi(i, a) * k + gi(j, b)][gi(l, cayley[a][b])] = p[l];
    }
  Coords unit(k, 0);
  Coords one = r.coords(*r.identity());
  for (std::size_t l = 0; l < kr; ++l) unit[gi(l, ident)] = one[l];
  t.unit = unit;
  if (name.empty()) name = r.name() + "[H" + std::to_string(m) + "]";
  return FiniteRing::validate(std::move(name), t);
}

FiniteRing unitalize(const FiniteRing& r) {
  const std::size_t kr = r.rank();
  if (kr == 0) return FiniteRing::validate(r.name() + "'", RingTable{});
  const std::size_t k = kr + 1;
  const std::int64_t e = r.additive().exponent();
  RingTable t;
  t.orders.push_back(e);
  for (auto d : r.additive().orders()) t.orders.push_back(d);
  t.mul.assign(k * k, Coords(k, 0));
  t.mul[0][0] = 1;
  for (std::size_t i = 0; i < kr; ++i) {
    t.mul[0 * k + (i + 1)][i + 1] = 1;
    t.mul[(i + 1) * k + 0][i + 1] = 1;
    for (std::size_t j = 0; j < kr; ++j) {
      Coords p = r.coords(r.generator_product(i, j));
      for (std::size_t l = 0; l < kr; ++l) t.mul[(i + 1) * k + (j + 1)][l + 1] = p[l];
    }
  }
  Coords unit(k, 0);
  unit[0] = 1;
  t.unit = unit;
  return FiniteRing::validate(r.name() + "'", t);
}

}  // namespace ringinv
