#include "ringinv/theorems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ringinv {

namespace {

const std::vector<std::pair<TheoremId, const char*>>& theorem_names() {
  static const std::vector<std::pair<TheoremId, const char*>> names{
      {TheoremId::BI_1_4, "BI_1_4"},     {TheoremId::MONT_1_7, "MONT_1_7"}, {TheoremId::N1, "N1"},
      {TheoremId::C1_5, "C1_5"},         {TheoremId::N2, "N2"},             {TheoremId::COR_A8, "COR_A8"},
      {TheoremId::TH_1_9, "TH_1_9"},     {TheoremId::TH_4APR, "TH_4APR"},   {TheoremId::RAD_1_4, "RAD_1_4"},
      {TheoremId::B5APR, "B5APR"},       {TheoremId::LEVITZKI, "LEVITZKI"}, {TheoremId::TH_8APR, "TH_8APR"},
      {TheoremId::COR_B8, "COR_B8"},     {TheoremId::A5APR, "A5APR"},       {TheoremId::LEM_A6, "LEM_A6"},
      {TheoremId::LEM_B6, "LEM_B6"},     {TheoremId::LEM_C6, "LEM_C6"},     {TheoremId::COR_C8, "COR_C8"}};
  return names;
}

bool ok(Status s) { return s == Status::Holds || s == Status::HoldsDominated || s == Status::Masked; }

Status all_of(std::initializer_list<Status> ss) {
  bool capped = false;
  for (Status s : ss) {
    if (s == Status::Fails) return Status::Fails;
    if (s == Status::Capped) capped = true;
  }
  return capped ? Status::Capped : Status::Holds;
}

Status any_of(std::initializer_list<Status> ss) {
  bool capped = false;
  for (Status s : ss) {
    if (ok(s)) return Status::Holds;
    if (s == Status::Capped) capped = true;
  }
  return capped ? Status::Capped : Status::Fails;
}

Status from_bool(bool b) { return b ? Status::Holds : Status::Fails; }

Status from_tri(Tri t) { return t == Tri::Yes ? Status::Holds : t == Tri::No ? Status::Fails : Status::Capped; }

std::string join_primes(const std::vector<std::int64_t>& ps) {
  std::string out;
  for (auto p : ps) out += (out.empty() ? "" : ", ") + std::to_string(p);
  return "{" + out + "}";
}

/// Collects hypothesis clauses and conclusion parts for one report.
class Builder {
 public:
  Builder(TheoremId id, Analysis& a, const MaskSet& masks) : a_(a), masks_(masks) {
    rep_.theorem = id;
    rep_.ring = a.ring().name();
    rep_.group = a.group().name();
    rep_.caps = a.caps();
    rep_.seed = a.seed();
  }

  /// Records a hypothesis; returns its effective status (Masked counts as holding).
  Status hyp(const std::string& id, const std::string& text, Status s, std::optional<std::string> witness = {}) {
    if (masks_.count({rep_.theorem, id})) {
      rep_.notes.push_back("hypothesis (" + id + ") masked; computed status: " + to_string(s) +
                           (witness ? " [" + *witness + "]" : ""));
      s = Status::Masked;
      witness.reset();
    }
    rep_.hypotheses.push_back({id, "(" + id + ") " + text, s, std::move(witness)});
    return s;
  }

  void part(const std::string& text, Status s, std::optional<std::string> witness = {}) {
    parts_.push_back({"", text, s, std::move(witness)});
  }

  void note(std::string n) { rep_.notes.push_back(std::move(n)); }

  TheoremReport finish(const std::string& conclusion_text, Status hypotheses) {
    Clause c;
    c.text = conclusion_text;
    bool capped = false, dominated = false;
    const Clause* failing = nullptr;
    for (const auto& p : parts_) {
      if (p.status == Status::Fails && !failing) failing = &p;
      if (p.status == Status::Capped) capped = true;
      if (p.status == Status::HoldsDominated) dominated = true;
    }
    c.status = failing ? Status::Fails : capped ? Status::Capped : dominated ? Status::HoldsDominated : Status::Holds;
    if (failing) c.witness = failing->text + (failing->witness ? ": " + *failing->witness : "");
    if (parts_.size() > 1 || (parts_.size() == 1 && parts_[0].witness))
      for (const auto& p : parts_)
        rep_.notes.push_back("conclusion part: " + p.text + ": " + to_string(p.status) +
                             (p.witness ? " [" + *p.witness + "]" : ""));
    rep_.conclusion = std::move(c);
    if (hypotheses == Status::Fails) {
      rep_.verdict = Verdict::Vacuous;
      std::string failed;
      for (const auto& h : rep_.hypotheses)
        if (h.status == Status::Fails) failed += (failed.empty() ? "" : ", ") + ("(" + h.id + ")");
      rep_.notes.push_back("failing hypotheses: " + failed);
    } else if (hypotheses == Status::Capped) {
      rep_.verdict = Verdict::Skipped;
    } else if (rep_.conclusion.status == Status::Fails) {
      rep_.verdict = Verdict::Counterexample;
    } else if (rep_.conclusion.status == Status::Capped) {
      rep_.verdict = Verdict::Skipped;
    } else {
      rep_.verdict = Verdict::Verified;
    }
    return std::move(rep_);
  }

 private:
  Analysis& a_;
  const MaskSet& masks_;
  TheoremReport rep_;
  std::vector<Clause> parts_;
};

// Shared evaluations ---------------------------------------------------------

struct Eval {
  Status status;
  std::optional<std::string> witness;
};

Eval torsion_free(const FiniteRing& r, const Subgroup& s, std::int64_t n) {
  if (is_torsion_free(s, n)) return {Status::Holds, std::nullopt};
  for (auto p : prime_factors(n)) {
    std::optional<Elem> w;
    s.for_each([&](Elem x) {
      if (!w && x != 0 && r.scale(p, x) == 0) w = x;
    });
    if (w) return {Status::Fails, std::to_string(p) + " * " + format_element(r, *w) + " = 0"};
  }
  return {Status::Fails, std::nullopt};
}

Eval nonempty_bad(Analysis& a) {
  const auto& b = a.bad_primes();
  if (b.empty()) return {Status::Fails, std::string("B(R,G) is empty")};
  return {Status::Holds, "B(R,G) = " + join_primes(b.list())};
}

Eval complements(Analysis& a) {
  std::vector<std::int64_t> missing;
  std::string found;
  for (const auto& bp : a.bad_primes().primes) {
    if (!bp.complement)
      missing.push_back(bp.p);
    else
      found += (found.empty() ? "" : ", ") + ("|N(" + std::to_string(bp.p) + ")| = " + std::to_string(bp.complement->size()));
  }
  if (!missing.empty()) return {Status::Fails, "no p-normal complement for p in " + join_primes(missing)};
  if (found.empty()) return {Status::Holds, std::string("B(R,G) is empty")};
  return {Status::Holds, found};
}

Eval semiprime(Analysis& a) {
  const auto& n = a.prime_radical();
  if (n.is_zero()) return {Status::Holds, std::nullopt};
  return {Status::Fails, "n(R) = " + format_subgroup(a.ring(), n)};
}

Eval semisimple(Analysis& a) {
  const auto& j = a.jacobson_radical();
  if (j.is_zero()) return {Status::Holds, std::nullopt};
  return {Status::Fails, "rad(R) = " + format_subgroup(a.ring(), j)};
}

Eval fixed_semiprime(Analysis& a) {
  const auto& n = a.fixed_prime_radical();
  if (n.is_zero()) return {Status::Holds, std::nullopt};
  return {Status::Fails, "n(R^G) = " + format_subgroup(a.ring(), n)};
}

Eval fixed_semisimple(Analysis& a) {
  const auto& j = a.fixed_jacobson_radical();
  if (j.is_zero()) return {Status::Holds, std::nullopt};
  return {Status::Fails, "rad(R^G) = " + format_subgroup(a.ring(), j)};
}

Eval proper_splitting_group(Analysis& a) {
  std::size_t li = 0, ri = 0;
  Tri l = a.proper_splitting_group(Side::Left, &li);
  Tri r = a.proper_splitting_group(Side::Right, &ri);
  Status s = any_of({from_tri(l), from_tri(r)});
  std::string w = "left: " + std::string(l == Tri::Yes ? "yes" : l == Tri::No ? "no" : "undecided") +
                  ", right: " + std::string(r == Tri::Yes ? "yes" : r == Tri::No ? "no" : "undecided") + "; " +
                  std::to_string(a.splittings().found.size()) + " splitting(s) found" +
                  (a.splittings().exhaustive ? "" : " (search capped)");
  return {s, w};
}

Eval splitting_exists(Analysis& a) {
  const auto& s = a.splittings();
  if (!s.found.empty())
    return {Status::Holds, "B = " + format_subgroup(a.ring(), s.found[0].complement)};
  return {s.exhaustive ? Status::Fails : Status::Capped, std::string("no R^G-bimodule complement found")};
}

/// Records conditions 1 and 2 of the semiprime-invariants theorem for the
/// (possibly reduced) analysis `a`, with torsion measured by `n`.
std::pair<Status, Status> n2_conditions(Builder& b, Analysis& a, std::int64_t n, const std::string& prefix,
                                        const std::string& ring_text) {
  auto c = complements(a);
  Status s1 = b.hyp(prefix + "1", "the group has a p-normal complement N(p) for every bad prime p" + ring_text,
                    c.status, c.witness);
  auto t = torsion_free(a.ring(), a.fixed(), n);
  Status s2 = b.hyp(prefix + "2", "the invariant ring" + ring_text + " is " + std::to_string(n) + "-torsion free",
                    t.status, t.witness);
  return {s1, s2};
}

Status nilpotent_part(const NilpotencyResult& nil, std::string* witness) {
  if (nil.index) {
    *witness = "index " + std::to_string(*nil.index);
    return Status::Holds;
  }
  if (nil.stabilized) {
    *witness = "powers stabilize at a nonzero subgroup after " + std::to_string(nil.iterations) + " steps";
    return Status::Fails;
  }
  *witness = "no decision within " + std::to_string(nil.iterations) + " power iterations";
  return Status::Capped;
}

void radical_equality_part(Builder& b, Analysis& a, const std::string& text, const Subgroup& lhs,
                           const Subgroup& rhs) {
  if (lhs == rhs)
    b.part(text, Status::Holds, format_subgroup(a.ring(), lhs));
  else
    b.part(text, Status::Fails,
           "left side " + format_subgroup(a.ring(), lhs) + ", right side " + format_subgroup(a.ring(), rhs));
}

void udim_parts(Builder& b, Analysis& a) {
  for (Side side : {Side::Left, Side::Right}) {
    const auto& u = a.udim(side);
    const auto& uf = a.fixed_udim(side);
    std::string text = std::string("udim(R^G) <= udim(R) <= |G| udim(R^G) (") + to_string(side) + ")";
    std::string w = "udim(R) = " + std::to_string(u.value) + ", udim(R^G) = " + std::to_string(uf.value);
    if (!u.exhaustive || !uf.exhaustive) {
      b.part(text, Status::Capped, w + " (lower bounds)");
      continue;
    }
    b.part(text, from_bool(uf.value <= u.value && u.value <= a.n() * uf.value), w);
  }
}

// Decomposition statements for one splitting and side.
void c6_parts(Builder& b, Analysis& a, const Splitting& s, Side side) {
  const std::string sd = std::string(" (") + to_string(side) + ")";
  const auto& inv = a.invariant_ideals(side);
  const auto& fixed_ideals = a.fixed_ideals(side);
  std::vector<Subgroup> js;
  for (const auto& j : fixed_ideals.ideals) js.push_back(a.fixed_ring().to_parent(j));
  const FiniteRing& r = a.ring();
  Status s1 = Status::Holds, s2 = Status::Holds, s3 = Status::Holds;
  std::optional<std::string> w1, w2, w3;
  std::size_t pairs = 0;
  for (const auto& i : inv.ideals) {
    Subgroup ir = intersect(i, a.fixed());
    if (s1 == Status::Holds && !(sum(ir, intersect(i, s.complement)) == i)) {
      s1 = Status::Fails;
      w1 = "I = " + format_subgroup(r, i);
    }
    for (const auto& j : js) {
      if (!j.contains(ir)) continue;
      ++pairs;
      Subgroup back = intersect(sum(extend(r, j, side), i), a.fixed());
      if (s2 == Status::Holds && !(back == j)) {
        s2 = Status::Fails;
        w2 = "I = " + format_subgroup(r, i) + ", J = " + format_subgroup(r, j);
      }
    }
    std::size_t lf = a.fixed_length(ir, side), lr = a.length(i, side);
    if (s3 == Status::Holds && lf > lr) {
      s3 = Status::Fails;
      w3 = "I = " + format_subgroup(r, i) + ": " + std::to_string(lf) + " > " + std::to_string(lr);
    }
  }
  if (!inv.exhaustive || !fixed_ideals.exhaustive) {
    if (s1 == Status::Holds) s1 = Status::Capped;
    if (s2 == Status::Holds) s2 = Status::Capped;
    if (s3 == Status::Holds) s3 = Status::Capped;
  }
  b.part("every G-invariant ideal I equals (I cap R^G) + (I cap B)" + sd, s1, w1);
  b.part("(RJ + I) cap R^G = J for every ideal J of R^G containing I cap R^G" + sd, s2,
         w2 ? w2 : std::optional<std::string>(std::to_string(pairs) + " pairs"));
  b.part("l_{R^G}(R^G/(R^G cap I)) <= l_R(R/I)" + sd, s3, w3);
  b.part("R^G/(R^G cap I) is Artinian and Noetherian" + sd, Status::Holds, std::string("finite module"));
}

// Checkers ------------------------------------------------------------------

TheoremReport check_bi(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::BI_1_4, a, m);
  const auto n = static_cast<std::int64_t>(a.n());
  auto tf = torsion_free(a.ring(), Subgroup::whole(a.ring().additive()), n);
  Status h1 = b.hyp("1", "R is |G|-torsion free", tf.status, tf.witness);
  const auto& tn = a.trace_nilpotency();
  std::string tw;
  Status h2 = b.hyp("2", "t(R)^d = 0 for some d >= 1", nilpotent_part(tn, &tw), tn.index ? "d = " + std::to_string(*tn.index) : tw);
  const auto& nil = a.nilpotency();
  std::string text = "R^{h(G)^d} = 0";
  if (tn.index) {
    BoundExpr bound{h_constant(a.n()), *tn.index, 1};
    b.note("h(G) = " + h_constant(a.n()).str() + ", bound h(G)^d = " + bound.to_string());
    if (nil.index) {
      b.part(text, bound.at_least(*nil.index) ? Status::HoldsDominated : Status::Fails,
             "R^k = 0 with k = " + std::to_string(*nil.index) + ", bound " + bound.to_string());
    } else {
      std::string w;
      b.part(text, nilpotent_part(nil, &w), "R: " + w);
    }
  } else {
    std::string w;
    Status s = nilpotent_part(nil, &w);
    b.part(text, s == Status::Holds ? Status::HoldsDominated : s, "no d available; R: " + w);
  }
  return b.finish(text, all_of({h1, h2}));
}

TheoremReport check_mont17(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::MONT_1_7, a, m);
  Status h1 = b.hyp("1", "R^G = {0}", from_bool(a.fixed().is_zero()),
                    a.fixed().is_zero() ? std::nullopt
                                        : std::optional<std::string>("R^G = " + format_subgroup(a.ring(), a.fixed())));
  auto c = complements(a);
  Status h2 = b.hyp("2", "G has a p-normal complement for every p in B(R,G)", c.status, c.witness);
  std::string w;
  Status s = nilpotent_part(a.nilpotency(), &w);
  b.part("R is nilpotent", s, w);
  return b.finish("R is nilpotent", all_of({h1, h2}));
}

TheoremReport check_n1(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::N1, a, m);
  auto ne = nonempty_bad(a);
  Status hb = b.hyp("B", "B(R,G) is nonempty", ne.status, ne.witness);
  auto c = complements(a);
  Status h1 = b.hyp("1", "G has a p-normal complement N(p) for every p in B(R,G)", c.status, c.witness);
  const auto& bad = a.bad_primes();
  // condition 2
  std::vector<std::int64_t> torsion_primes;
  for (const auto& bp : bad.primes)
    if (!a.fixed_torsion_free(bp.p)) torsion_primes.push_back(bp.p);
  Status h2 = b.hyp("2", "R^G is p-torsion free for every p in B(R,G)", from_bool(torsion_primes.empty()),
                    torsion_primes.empty() ? std::nullopt
                                           : std::optional<std::string>("p-torsion for p in " + join_primes(torsion_primes)));
  // condition 3
  Status s3 = Status::Holds;
  std::string w3;
  for (const auto& bp : bad.primes) {
    std::string piece = "p = " + std::to_string(bp.p) + ": ";
    if (!bp.complement) {
      s3 = Status::Fails;
      piece += "N(p) undefined";
    } else if (bp.d) {
      piece += "d(p) = " + std::to_string(*bp.d);
    } else if (bp.never_nilpotent) {
      s3 = Status::Fails;
      piece += "relative trace image is not nilpotent";
    } else {
      if (s3 != Status::Fails) s3 = Status::Capped;
      piece += "no d(p) <= " + std::to_string(bp.d_cap);
    }
    w3 += (w3.empty() ? "" : "; ") + piece;
  }
  Status h3 = b.hyp("3", "t_{G(p)}(R^{N(p)})^{d(p)} = 0 for some d(p) >= 1, for every p in B(R,G)", s3,
                    w3.empty() ? std::nullopt : std::optional<std::string>(w3));
  b.note("d(p) search cap " + std::to_string(a.caps().dp));

  const auto& nil = a.nilpotency();
  // conclusion 1: R^l = 0
  std::vector<BoundExpr> ls;
  bool all_defined = !bad.empty();
  for (const auto& bp : bad.primes) {
    if (!bp.complement || !bp.d) {
      all_defined = false;
      continue;
    }
    std::uint64_t order_n = bp.complement->size();
    std::uint64_t order_gp = a.n() / order_n;
    BoundExpr l{h_constant(order_n), h_constant(order_gp), *bp.d};
    b.note("p = " + std::to_string(bp.p) + ": |N(p)| = " + std::to_string(order_n) + ", |G(p)| = " +
           std::to_string(order_gp) + ", l(p) = " + l.to_string());
    ls.push_back(l);
  }
  std::string text1 = "R^l = 0 with l = max l(p)";
  if (all_defined && nil.index) {
    bool dominated = std::any_of(ls.begin(), ls.end(), [&](const BoundExpr& l) { return l.at_least(*nil.index); });
    b.part(text1, dominated ? Status::HoldsDominated : Status::Fails,
           "R^k = 0 with k = " + std::to_string(*nil.index));
  } else {
    std::string w;
    Status s = nilpotent_part(nil, &w);
    b.part(text1, s == Status::Holds ? Status::HoldsDominated : s,
           (all_defined ? "" : "l undefined; ") + std::string("R: ") + w);
  }
  // conclusion 2: R^{N(p)} p-torsion free and (R^{N(p)})^{m(p)} = 0
  for (const auto& bp : bad.primes) {
    std::string text2 = "R^{N(p)} is p-torsion free and (R^{N(p)})^{m(p)} = 0 for p = " + std::to_string(bp.p);
    if (!bp.complement) {
      b.part(text2, Status::Fails, std::string("N(p) undefined"));
      continue;
    }
    auto tf = torsion_free(a.ring(), *bp.complement_fixed, bp.p);
    auto sub_nil = nilpotency_index(a.ring(), *bp.complement_fixed, a.caps().nilpotency);
    if (tf.status == Status::Fails) {
      b.part(text2, Status::Fails, tf.witness);
      continue;
    }
    if (!bp.d) {
      std::string w;
      Status s = nilpotent_part(sub_nil, &w);
      b.part(text2, s == Status::Holds ? Status::HoldsDominated : s, "m(p) undefined; R^{N(p)}: " + w);
      continue;
    }
    BoundExpr mp{h_constant(a.n() / bp.complement->size()), *bp.d, 1};
    if (sub_nil.index)
      b.part(text2, mp.at_least(*sub_nil.index) ? Status::HoldsDominated : Status::Fails,
             "index " + std::to_string(*sub_nil.index) + ", m(p) = " + mp.to_string());
    else {
      std::string w;
      b.part(text2, nilpotent_part(sub_nil, &w), w);
    }
  }
  return b.finish("R^l = 0 and every R^{N(p)} is p-torsion free with (R^{N(p)})^{m(p)} = 0",
                  all_of({hb, h1, h2, h3}));
}

void trace_ideal_parts(Builder& b, Analysis& a, bool powers) {
  Status s = Status::Holds;
  std::optional<std::string> w;
  bool exhaustive = true;
  std::size_t scanned = 0;
  for (Side side : {Side::Left, Side::Right}) {
    const auto& lat = a.invariant_ideals(side);
    exhaustive = exhaustive && lat.exhaustive;
    for (const auto& i : lat.ideals) {
      if (i.is_zero() || s == Status::Fails) continue;
      ++scanned;
      Subgroup t = trace_image(a.group(), i);
      if (!powers) {
        if (t.is_zero()) {
          s = Status::Fails;
          w = std::string(to_string(side)) + " ideal I = " + format_subgroup(a.ring(), i);
        }
        continue;
      }
      auto nil = nilpotency_index(a.ring(), t, a.caps().nilpotency);
      if (nil.index) {
        s = Status::Fails;
        w = std::string(to_string(side)) + " ideal I = " + format_subgroup(a.ring(), i) + " with t(I)^" +
            std::to_string(*nil.index) + " = 0";
      } else if (!nil.stabilized && s == Status::Holds) {
        s = Status::Capped;
      }
    }
  }
  if (!exhaustive && s == Status::Holds) s = Status::Capped;
  std::string text = powers ? "t(I)^i != 0 for all i >= 1 and all nonzero G-invariant left or right ideals I"
                            : "t(I) != 0 for all nonzero G-invariant left or right ideals I";
  b.part(text, s, w ? w : std::optional<std::string>(std::to_string(scanned) + " ideals scanned"));
}

TheoremReport check_c15(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::C1_5, a, m);
  auto sp = semiprime(a);
  Status h1 = b.hyp("1", "R is semiprime", sp.status, sp.witness);
  auto tf = torsion_free(a.ring(), Subgroup::whole(a.ring().additive()), static_cast<std::int64_t>(a.n()));
  Status h2 = b.hyp("2", "R is |G|-torsion free", tf.status, tf.witness);
  auto fs = fixed_semiprime(a);
  b.part("R^G is semiprime", fs.status, fs.witness);
  trace_ideal_parts(b, a, false);
  return b.finish("R^G is semiprime and t(I) != 0 for all nonzero G-invariant one-sided ideals", all_of({h1, h2}));
}

std::vector<Status> n2_hypotheses(Builder& b, Analysis& a) {
  auto sp = semiprime(a);
  Status hp = b.hyp("P", "R is semiprime", sp.status, sp.witness);
  auto ne = nonempty_bad(a);
  Status hb = b.hyp("B", "B(R,G) is nonempty", ne.status, ne.witness);
  auto [h1, h2] = n2_conditions(b, a, static_cast<std::int64_t>(a.n()), "", "");
  if (sp.status == Status::Holds && ne.status == Status::Holds && h2 == Status::Fails)
    b.note("a finite semiprime ring is unital and the p-component of its identity is a nonzero G-fixed p-torsion "
           "element, so condition (2) fails whenever B(R,G) is nonempty");
  return {hp, hb, h1, h2};
}

TheoremReport check_n2(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::N2, a, m);
  auto hs = n2_hypotheses(b, a);
  auto fs = fixed_semiprime(a);
  b.part("R^G is semiprime", fs.status, fs.witness);
  trace_ideal_parts(b, a, true);
  return b.finish("R^G is semiprime and t(I)^i != 0 for all i >= 1 and all nonzero G-invariant one-sided ideals",
                  all_of({hs[0], hs[1], hs[2], hs[3]}));
}

TheoremReport check_cor_a8(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::COR_A8, a, m);
  auto hs = n2_hypotheses(b, a);
  b.note("B(R,G) != 0 read as B(R,G) nonempty");
  b.part("R is left and right Goldie iff R^G is", Status::Holds,
         std::string("finite rings have finite ideal lattices, so both are Goldie"));
  auto reg = regular_elements_quotient(a.ring());
  auto freg = regular_elements_quotient(a.fixed_ring().ring);
  bool inclusion = true;
  for (Elem x : freg.regular) {
    Elem px = a.fixed_ring().to_parent(x);
    inclusion = inclusion && std::binary_search(reg.regular.begin(), reg.regular.end(), px);
  }
  b.part("C_{R^G} is contained in C_R", from_bool(inclusion),
         std::to_string(freg.regular.size()) + " regular elements in R^G, " + std::to_string(reg.regular.size()) +
             " in R");
  if (a.ring().is_unital() && a.fixed_ring().ring.is_unital()) {
    bool q = reg.regular_are_units && freg.regular_are_units;
    b.part("Q(R)^G = Q(R^G) with Q(R) = R and Q(R^G) = R^G", from_bool(q),
           std::string("regular elements are units in R: ") + (reg.regular_are_units ? "yes" : "no") +
               ", in R^G: " + (freg.regular_are_units ? "yes" : "no"));
  } else {
    b.note("quotient rings degenerate: R or R^G is not unital");
  }
  udim_parts(b, a);
  return b.finish("Goldie transfer, quotient rings and udim(R^G) <= udim(R) <= |G| udim(R^G)",
                  all_of({hs[0], hs[1], hs[2], hs[3]}));
}

TheoremReport check_cor_b8(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::COR_B8, a, m);
  auto hs = n2_hypotheses(b, a);
  b.note("B(R,G) != 0 read as B(R,G) nonempty");
  bool r_ss = a.jacobson_radical().is_zero();
  bool f_ss = a.fixed_jacobson_radical().is_zero();
  b.part("R is semisimple Artinian iff R^G is", from_bool(r_ss == f_ss),
         std::string("R: ") + (r_ss ? "yes" : "no") + ", R^G: " + (f_ss ? "yes" : "no"));
  if (r_ss && f_ss) udim_parts(b, a);
  return b.finish("R is semisimple Artinian iff R^G is, and then udim(R^G) <= udim(R) <= |G| udim(R^G)",
                  all_of({hs[0], hs[1], hs[2], hs[3]}));
}

TheoremReport check_th19(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::TH_1_9, a, m);
  auto tf = torsion_free(a.ring(), Subgroup::whole(a.ring().additive()), static_cast<std::int64_t>(a.n()));
  Status h1 = b.hyp("1", "R is |G|-torsion free", tf.status, tf.witness);
  radical_equality_part(b, a, "n(R^G) = R^G cap n(R)", a.fixed_prime_radical(),
                        intersect(a.fixed(), a.prime_radical()));
  return b.finish("n(R^G) = R^G cap n(R)", h1);
}

TheoremReport check_th4apr(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::TH_4APR, a, m);
  auto& red = a.by_prime_radical();
  Analysis& ra = *red.analysis;
  b.note("R/n(R) has order " + std::to_string(ra.ring().order()) + ", induced group of order " +
         std::to_string(ra.n()) + " (|G| = " + std::to_string(a.n()) + ")");
  auto ne = nonempty_bad(ra);
  b.note(ne.status == Status::Holds ? "for the reduced ring " + *ne.witness : "for the reduced ring B is empty");
  auto [h1, h2] = n2_conditions(b, ra, static_cast<std::int64_t>(a.n()), "", " of R/n(R)");
  radical_equality_part(b, a, "n(R^G) = R^G cap n(R)", a.fixed_prime_radical(),
                        intersect(a.fixed(), a.prime_radical()));
  const FiniteRing& rb = ra.ring();
  auto fs = fixed_semiprime(ra);
  b.part("the invariant ring of R/n(R) is semiprime", fs.status, fs.witness);
  auto image = subring_ring(rb, red.image_of_fixed, rb.name() + "-image");
  Subgroup image_rad = prime_radical(image.ring);
  b.part("the image of R^G in R/n(R) is semiprime", from_bool(image_rad.is_zero()),
         image_rad.is_zero() ? std::nullopt
                             : std::optional<std::string>(format_subgroup(rb, image.to_parent(image_rad))));
  Subgroup scaled(rb.additive());
  for (Elem x : ra.fixed().generators()) scaled.insert(rb.scale(static_cast<std::int64_t>(a.n()), x));
  bool inc = red.image_of_fixed.contains(scaled) && ra.fixed().contains(red.image_of_fixed);
  b.part("|G| (R/n(R))^G is inside the image of R^G, which is inside (R/n(R))^G", from_bool(inc));
  return b.finish("n(R^G) = R^G cap n(R); the invariant and image rings are semiprime with the stated inclusions",
                  all_of({h1, h2}));
}

TheoremReport check_rad14(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::RAD_1_4, a, m);
  Status h1 = b.hyp("1", "|G|^-1 is in R", from_bool(a.order_invertible()),
                    a.order_invertible() ? std::nullopt
                                         : std::optional<std::string>("gcd(|G|, exponent of R) = " +
                                                                      std::to_string(std::gcd(
                                                                          static_cast<std::int64_t>(a.n()),
                                                                          a.ring().additive().exponent()))));
  radical_equality_part(b, a, "rad(R^G) = rad(R) cap R^G", a.fixed_jacobson_radical(),
                        intersect(a.jacobson_radical(), a.fixed()));
  return b.finish("rad(R^G) = rad(R) cap R^G", h1);
}

/// Hypotheses (b), (1), (2) shared by the splitting-group theorems, evaluated
/// on analysis `t` (the ring itself or its reduction).
Status splitting_alternatives(Builder& b, Analysis& t, const std::string& ring_text, Status pre) {
  auto ps = proper_splitting_group(t);
  Status hb = b.hyp("b", "the group is a left or right proper splitting group for " + ring_text, ps.status, ps.witness);
  auto tf = torsion_free(t.ring(), Subgroup::whole(t.ring().additive()), static_cast<std::int64_t>(t.n()));
  Status h1 = b.hyp("1", ring_text + " is |G|-torsion free", tf.status, tf.witness);
  auto ne = nonempty_bad(t);
  auto c = complements(t);
  auto ft = torsion_free(t.ring(), t.fixed(), static_cast<std::int64_t>(t.n()));
  Status inner = all_of({ne.status, c.status, ft.status});
  std::string w2 = std::string(ne.witness ? *ne.witness : "") + "; " + (c.witness ? *c.witness : "") + "; invariants " +
                   (ft.status == Status::Holds ? "|G|-torsion free" : "not |G|-torsion free" +
                                                                          (ft.witness ? " (" + *ft.witness + ")" : std::string()));
  Status h2 = b.hyp("2", "B is nonempty and conditions 1 and 2 of the semiprime-invariants theorem hold for " + ring_text,
                    inner, w2);
  return all_of({pre, hb, any_of({h1, h2})});
}

TheoremReport check_b5apr(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::B5APR, a, m);
  auto& red = a.by_jacobson_radical();
  Analysis& ra = *red.analysis;
  bool eq = red.image_of_fixed == ra.fixed();
  Status ha = b.hyp("a", "the image of R^G in R/rad(R) equals the invariants of R/rad(R)", from_bool(eq),
                    eq ? std::nullopt
                       : std::optional<std::string>("image " + format_subgroup(ra.ring(), red.image_of_fixed) +
                                                    ", invariants " + format_subgroup(ra.ring(), ra.fixed())));
  Status hyps = splitting_alternatives(b, ra, "R/rad(R)", ha);
  radical_equality_part(b, a, "rad(R^G) = rad(R) cap R^G", a.fixed_jacobson_radical(),
                        intersect(a.jacobson_radical(), a.fixed()));
  return b.finish("rad(R^G) = rad(R) cap R^G", hyps);
}

TheoremReport check_levitzki(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::LEVITZKI, a, m);
  Status h1 = b.hyp("1", "|G|^-1 is in R", from_bool(a.order_invertible()));
  auto ss = semisimple(a);
  Status h2 = b.hyp("2", "R is semisimple Artinian", ss.status, ss.witness);
  auto fs = fixed_semisimple(a);
  b.part("R^G is semisimple Artinian", fs.status, fs.witness);
  return b.finish("R^G is semisimple Artinian", all_of({h1, h2}));
}

TheoremReport check_th8apr(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::TH_8APR, a, m);
  auto ss = semisimple(a);
  Status hp = b.hyp("P", "R is semisimple Artinian", ss.status, ss.witness);
  Status hyps = splitting_alternatives(b, a, "R", hp);
  auto fs = fixed_semisimple(a);
  b.part("R^G is semisimple Artinian", fs.status, fs.witness);
  return b.finish("R^G is semisimple Artinian", hyps);
}

TheoremReport check_a5apr(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::A5APR, a, m);
  auto ss = semisimple(a);
  Status ha = b.hyp("a", "rad(R) = 0", ss.status, ss.witness);
  Status hyps = splitting_alternatives(b, a, "R", ha);
  auto fs = fixed_semisimple(a);
  b.part("rad(R^G) = 0", fs.status, fs.witness);
  return b.finish("rad(R^G) = 0", hyps);
}

TheoremReport check_lem_a6(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::LEM_A6, a, m);
  auto se = splitting_exists(a);
  Status h1 = b.hyp("1", "R = R^G + B is a direct sum of R^G-bimodules", se.status, se.witness);
  const auto& found = a.splittings().found;
  for (Side side : {Side::Left, Side::Right}) {
    Status s = Status::Holds;
    std::optional<std::string> w;
    std::size_t proper = 0, reverse = 0;
    bool exhaustive = a.invariant_ideals(side).exhaustive;
    for (std::size_t i = 0; i < found.size(); ++i) {
      const auto& c = a.proper_check(i, side);
      proper += c.proper;
      reverse += c.reverse;
      if (c.proper != c.equality && s == Status::Holds) {
        s = Status::Fails;
        w = "B = " + format_subgroup(a.ring(), found[i].complement);
      }
    }
    if (!exhaustive && s == Status::Holds) s = Status::Capped;
    b.note(std::string(to_string(side)) + ": " + std::to_string(found.size()) + " splitting(s), " +
           std::to_string(proper) + " with e(I) inside I cap R^G for all I, " + std::to_string(reverse) +
           " with I cap R^G inside e(I) for all I");
    b.part(std::string("proper iff e(I) = I cap R^G for all G-invariant ideals I (") + to_string(side) + ")", s, w);
  }
  return b.finish("a splitting is proper iff e(I) = I cap R^G for every G-invariant one-sided ideal I", h1);
}

TheoremReport check_lem_b6(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::LEM_B6, a, m);
  auto se = splitting_exists(a);
  Status h1 = b.hyp("1", "G is a splitting group (R = R^G + B as R^G-bimodules)", se.status, se.witness);
  b.note("extension uses the unitalized convention J^e = J + RJ (left), J + JR (right)");
  const FiniteRing& r = a.ring();
  for (Side side : {Side::Left, Side::Right}) {
    const auto& lat = a.fixed_ideals(side);
    Status s1 = Status::Holds, s2 = Status::Holds;
    std::optional<std::string> w1, w2;
    for (const auto& j0 : lat.ideals) {
      Subgroup j = a.fixed_ring().to_parent(j0);
      Subgroup je = extend(r, j, side);
      if (s1 == Status::Holds && !(intersect(je, a.fixed()) == j)) {
        s1 = Status::Fails;
        w1 = "J = " + format_subgroup(r, j);
      }
      std::size_t lf = a.fixed_length(j, side), lr = a.length(je, side);
      if (s2 == Status::Holds && lf > lr) {
        s2 = Status::Fails;
        w2 = "J = " + format_subgroup(r, j) + ": " + std::to_string(lf) + " > " + std::to_string(lr);
      }
    }
    if (!lat.exhaustive) {
      if (s1 == Status::Holds) s1 = Status::Capped;
      if (s2 == Status::Holds) s2 = Status::Capped;
    }
    std::string sd = std::string(" (") + to_string(side) + ")";
    b.part("J^er = J for every ideal J of R^G" + sd, s1,
           w1 ? w1 : std::optional<std::string>(std::to_string(lat.ideals.size()) + " ideals"));
    b.part("l_{R^G}(R^G/J) <= l_R(R/J^e) for every ideal J of R^G" + sd, s2, w2);
  }
  return b.finish("J^er = J and l_{R^G}(R^G/J) <= l_R(R/J^e) for all one-sided ideals J of R^G", h1);
}

TheoremReport check_lem_c6(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::LEM_C6, a, m);
  std::size_t li = 0, ri = 0;
  Tri l = a.proper_splitting_group(Side::Left, &li);
  Tri r = a.proper_splitting_group(Side::Right, &ri);
  auto ps = proper_splitting_group(a);
  Status h1 = b.hyp("1", "R = R^G + B is a left or right proper splitting", ps.status, ps.witness);
  b.note("statement 1 read as I = (I cap R^G) + (I cap B); statement 3 evaluated with l_R(R/I) on the right");
  if (l == Tri::Yes) c6_parts(b, a, a.splittings().found[li], Side::Left);
  if (r == Tri::Yes) c6_parts(b, a, a.splittings().found[ri], Side::Right);
  if (l != Tri::Yes && r != Tri::Yes) b.part("no proper splitting to evaluate", Status::Holds);
  return b.finish("decomposition, injectivity of J -> RJ + I and the length inequality for every G-invariant I", h1);
}

TheoremReport check_cor_c8(Analysis& a, const MaskSet& m) {
  Builder b(TheoremId::COR_C8, a, m);
  Status h1 = b.hyp("1", "|G|^-1 is in R", from_bool(a.order_invertible()));
  const auto& e = a.averaging();
  if (!e) {
    b.part("e = |G|^-1 sum g is undefined", Status::Fails, std::string("|G| not invertible"));
  } else {
    for (Side side : {Side::Left, Side::Right}) {
      auto c = is_proper_splitting(a.action(), *e, a.invariant_ideals(side));
      Status s = c.proper ? (c.exhaustive ? Status::Holds : Status::Capped) : Status::Fails;
      b.part(std::string("the averaging splitting is proper (") + to_string(side) + ")", s,
             c.witness ? std::optional<std::string>("I = " + format_subgroup(a.ring(), *c.witness)) : std::nullopt);
      c6_parts(b, a, *e, side);
    }
  }
  return b.finish("the splitting given by e = |G|^-1 sum g is proper and satisfies the decomposition statements", h1);
}

std::string big_text(const BigInt& v) {
  std::string s = v.str();
  if (s.size() > 40) return "<" + std::to_string(s.size()) + "-digit integer>";
  return s;
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& [id, name] : theorem_names()) v.push_back(id);
    return v;
  }();
  return ids;
}

const char* to_string(TheoremId id) {
  for (const auto& [i, name] : theorem_names())
    if (i == id) return name;
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& s) {
  for (const auto& [i, name] : theorem_names())
    if (s == name) return i;
  return std::nullopt;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Capped: return "capped";
    case Status::HoldsDominated: return "holds (dominated)";
    case Status::Masked: return "masked";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Skipped: return "skipped(cap)";
  }
  return "?";
}

bool BoundExpr::at_least(std::uint64_t k) const {
  if (k <= 1) return true;
  if (base <= 1) return base >= k;
  // exponent e = exp_base^exp_exp; base >= 2 so base^e >= 2^e
  BigInt e = 1;
  for (std::uint64_t i = 0; i < exp_exp; ++i) {
    e *= exp_base;
    if (e >= 64) return true;
  }
  BigInt v = 1;
  for (BigInt i = 0; i < e; ++i) v *= base;
  return v >= k;
}

std::string BoundExpr::to_string() const {
  std::string exponent = exp_exp == 1 ? big_text(exp_base) : big_text(exp_base) + "^" + std::to_string(exp_exp);
  std::string out = big_text(base) + "^" + (exp_exp == 1 ? exponent : "(" + exponent + ")");
  // exact value when it is small
  if (exp_base < 64 && exp_exp <= 2) {
    BigInt e = 1;
    for (std::uint64_t i = 0; i < exp_exp; ++i) e *= exp_base;
    if (base > 0 && e * (boost::multiprecision::msb(base) + 1) <= 128) {
      BigInt v = 1;
      for (BigInt i = 0; i < e; ++i) v *= base;
      out += " = " + v.str();
    }
  }
  return out;
}

std::string format_element(const FiniteRing& r, Elem x) {
  std::string s = "(";
  auto c = r.coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string format_subgroup(const FiniteRing& r, const Subgroup& s) {
  if (s.order() <= 8) {
    std::string out = "{";
    bool first = true;
    for (Elem x : s.elements()) {
      out += (first ? "" : ",") + format_element(r, x);
      first = false;
    }
    return out + "}";
  }
  std::string out = "order " + std::to_string(s.order()) + " spanned by ";
  bool first = true;
  for (Elem x : s.generators()) {
    out += (first ? "" : ",") + format_element(r, x);
    first = false;
  }
  return out;
}

TheoremReport check(TheoremId id, Analysis& a, const MaskSet& masks) {
  switch (id) {
    case TheoremId::BI_1_4: return check_bi(a, masks);
    case TheoremId::MONT_1_7: return check_mont17(a, masks);
    case TheoremId::N1: return check_n1(a, masks);
    case TheoremId::C1_5: return check_c15(a, masks);
    case TheoremId::N2: return check_n2(a, masks);
    case TheoremId::COR_A8: return check_cor_a8(a, masks);
    case TheoremId::TH_1_9: return check_th19(a, masks);
    case TheoremId::TH_4APR: return check_th4apr(a, masks);
    case TheoremId::RAD_1_4: return check_rad14(a, masks);
    case TheoremId::B5APR: return check_b5apr(a, masks);
    case TheoremId::LEVITZKI: return check_levitzki(a, masks);
    case TheoremId::TH_8APR: return check_th8apr(a, masks);
    case TheoremId::COR_B8: return check_cor_b8(a, masks);
    case TheoremId::A5APR: return check_a5apr(a, masks);
    case TheoremId::LEM_A6: return check_lem_a6(a, masks);
    case TheoremId::LEM_B6: return check_lem_b6(a, masks);
    case TheoremId::LEM_C6: return check_lem_c6(a, masks);
    case TheoremId::COR_C8: return check_cor_c8(a, masks);
  }
  throw std::logic_error("unknown theorem id");
}

std::vector<TheoremReport> check_all(Analysis& a, const std::vector<TheoremId>& ids, const MaskSet& masks) {
  std::vector<TheoremReport> out;
  for (auto id : ids) out.push_back(check(id, a, masks));
  return out;
}

std::vector<std::string> background_violations(Analysis& a) {
  std::vector<std::string> out;
  if (!a.fixed_jacobson_radical().contains(intersect(a.jacobson_radical(), a.fixed())))
    out.push_back(a.ring().name() + ": rad(R) cap R^G is not inside rad(R^G)");
  if (!a.fixed_prime_radical().contains(intersect(a.prime_radical(), a.fixed())))
    out.push_back(a.ring().name() + ": R^G cap n(R) is not inside n(R^G)");
  if (!(a.prime_radical() == a.jacobson_radical()))
    out.push_back(a.ring().name() + ": prime and Jacobson radicals of R differ");
  if (!(a.fixed_prime_radical() == a.fixed_jacobson_radical()))
    out.push_back(a.ring().name() + ": prime and Jacobson radicals of R^G differ");
  return out;
}

std::vector<TheoremReport> counterexample_search(const std::vector<GAction>& instances,
                                                 const std::vector<TheoremId>& ids, const MaskSet& masks,
                                                 const Caps& caps, std::uint64_t seed, std::size_t budget) {
  std::vector<TheoremReport> out;
  for (std::size_t i = 0; i < instances.size() && i < budget; ++i) {
    Analysis a(instances[i], caps, seed);
    for (auto& rep : check_all(a, ids, masks)) {
      if (rep.verdict != Verdict::Counterexample) continue;
      Analysis fresh(instances[i], caps, seed);
      auto again = check(rep.theorem, fresh, masks);
      if (to_json(again).dump() == to_json(rep).dump()) out.push_back(std::move(rep));
    }
  }
  sort_reports(out);
  return out;
}

nlohmann::ordered_json to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = to_string(r.theorem);
  j["ring"] = r.ring;
  j["group"] = r.group;
  auto clause = [](const Clause& c, bool with_text) {
    nlohmann::ordered_json o;
    if (with_text) o["text"] = c.text;
    o["status"] = to_string(c.status);
    if (c.witness) o["witness"] = *c.witness;
    return o;
  };
  j["hypotheses"] = nlohmann::ordered_json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back(clause(h, true));
  j["conclusion"] = clause(r.conclusion, false);
  j["verdict"] = to_string(r.verdict);
  nlohmann::ordered_json caps;
  for (const auto& [k, v] : r.caps.items()) caps[k] = v;
  j["caps"] = caps;
  j["seed"] = r.seed;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<TheoremReport>& rs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr;
}

void sort_reports(std::vector<TheoremReport>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const TheoremReport& x, const TheoremReport& y) {
    return std::tie(x.theorem, x.ring, x.group) < std::tie(y.theorem, y.ring, y.group);
  });
}

}  // namespace ringinv
