// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "ringinv/cli.hpp"

using namespace ringinv;

namespace {

constexpr std::uint64_t kSeed = 2026;
constexpr std::size_t kRandom = 500;
constexpr std::uint64_t kMaxOrder = 256;
constexpr double kRadicalSeconds = 300.0;

int failures = 0;

void report(int n, const std::string& title, bool ok, const std::string& detail) {
  std::cout << "[" << (ok ? "PASS" : "FAIL") << "] criterion " << n << " " << title << ": " << detail << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

const Clause* hyp(const TheoremReport& r, const std::string& id) {
  for (const auto& h : r.hypotheses)
    if (h.id == id) return &h;
  return nullptr;
}

const TheoremReport* find_report(const std::vector<TheoremReport>& rs, TheoremId id, const std::string& ring) {
  for (const auto& r : rs)
    if (r.theorem == id && r.ring == ring) return &r;
  return nullptr;
}

// 2: p-group fixed points ----------------------------------------------------

struct FixedPointTally {
  std::size_t actions = 0, modules = 0, zero_only = 0, bad = 0;
};

void fixed_point_suite(const AutomorphismGroup& p, std::int64_t prime, const Subgroup& ambient, FixedPointTally& t) {
  const FiniteRing& r = p.ring();
  ++t.actions;
  std::set<Subgroup> seen;
  auto run = [&](const Subgroup& v) {
    if (v.is_zero() || v.order() > 64 || !seen.insert(v).second) return;
    ++t.modules;
    auto x = p_group_fixed_point(p, v);
    if (!x || *x == 0) {
      ++t.zero_only;
      return;
    }
    bool fixed = v.contains(*x);
    for (std::size_t i = 0; i < p.order(); ++i) fixed = fixed && p[i](*x) == *x;
    if (!fixed) ++t.bad;
  };
  run(ambient);
  ambient.for_each([&](Elem x) {
    std::vector<Elem> orbit;
    for (std::size_t i = 0; i < p.order(); ++i) orbit.push_back(p[i](x));
    run(Subgroup::span(r.additive(), orbit));
  });
  (void)prime;
}

bool prime_power_of(std::uint64_t n, std::int64_t p) {
  if (n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

FixedPointTally criterion2(const std::vector<Instance>& catalog) {
  FixedPointTally t;
  const std::vector<std::vector<std::int64_t>> groups{{2},    {4},       {8},       {2, 2},    {2, 4},   {4, 4},
                                                      {2, 8}, {2, 2, 2}, {2, 2, 4}, {2, 2, 2, 2}, {2, 2, 2, 2, 2, 2},
                                                      {3},    {9},       {3, 3},    {3, 9},    {3, 3, 3}, {5},
                                                      {25},   {5, 5},    {7},       {49},      {7, 7}};
  for (const auto& orders : groups) {
    auto r = zero_mult_ring(AdditiveGroup(orders));
    std::int64_t p = orders[0] % 2 == 0 ? 2 : orders[0] % 3 == 0 ? 3 : orders[0] % 5 == 0 ? 5 : 7;
    auto found = search_automorphisms(r, 48, 200000).found;
    std::set<std::vector<Elem>> done;
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = i; j < found.size(); ++j) {
        AutomorphismGroup g;
        try {
          g = AutomorphismGroup::close(r, {found[i], found[j]}, "P", 8);
        } catch (const GroupError&) {
          continue;
        }
        if (!prime_power_of(g.order(), p)) continue;
        std::vector<Elem> key;
        for (std::size_t k = 0; k < g.order(); ++k) key.insert(key.end(), g[k].images().begin(), g[k].images().end());
        if (!done.insert(key).second) continue;
        fixed_point_suite(g, p, Subgroup::whole(r.additive()), t);
      }
  }
  // catalog actions by p-groups of order at most 8, acting on tor_p(R)
  for (const auto& inst : catalog) {
    auto n = inst.group.order();
    for (std::int64_t p : {2, 3, 5, 7})
      if (n <= 8 && prime_power_of(n, p)) {
        auto tor = torsion_ideal(inst.ring, p).sub;
        if (!tor.is_zero()) fixed_point_suite(inst.group, p, tor, t);
      }
  }
  return t;
}

}  // namespace

int main() {
  std::cout << "acceptance run: seed " << kSeed << ", " << kRandom << " random instances of order <= " << kMaxOrder
            << ", default caps\n";
  auto t0 = std::chrono::steady_clock::now();
  auto catalog = named_instances();
  const std::size_t named_count = catalog.size();
  auto batch = random_instances(RandomParams{kMaxOrder, kRandom, kSeed, 0, 1});
  catalog.insert(catalog.end(), batch.instances.begin(), batch.instances.end());
  double generation = seconds_since(t0);
  std::cout << "catalog: " << named_count << " named + " << batch.instances.size() << " random (" << batch.attempted
            << " attempts, " << batch.valid << " valid rings, raw tables " << batch.table_valid << "/"
            << batch.table_attempts << ", " << batch.rigid << " rigid), generated in " << generation << " s\n";

  // 1
  {
    auto t = std::chrono::steady_clock::now();
    std::size_t rings = 0, disagree = 0, too_large = 0;
    for (const auto& inst : catalog) {
      if (inst.ring.order() > kMaxOrder) {
        ++too_large;
        continue;
      }
      ++rings;
      if (!(prime_radical(inst.ring) == jacobson_radical(inst.ring))) ++disagree;
    }
    double secs = seconds_since(t) + generation;
    std::ostringstream d;
    d << rings << " rings of order <= 256, " << disagree << " disagreements, " << too_large << " above the bound, "
      << secs << " s including generation (limit " << kRadicalSeconds << " s)";
    report(1, "radical cross-oracle", rings >= 500 && disagree == 0 && secs <= kRadicalSeconds, d.str());
  }

  // 2
  {
    auto t = criterion2(catalog);
    std::ostringstream d;
    d << t.actions << " p-group actions (|P| <= 8), " << t.modules << " nonzero stable modules (|V| <= 64), "
      << t.zero_only << " zero-only results, " << t.bad << " non-fixed results";
    report(2, "p-group fixed points", t.modules > 0 && t.zero_only == 0 && t.bad == 0, d.str());
  }

  // 3
  {
    const char* expected[] = {"2", "6", "32", "350"};
    bool ok = true;
    std::string d;
    for (int n = 1; n <= 4; ++n) {
      auto v = h_constant(n).str();
      ok = ok && v == expected[n - 1];
      d += (n > 1 ? ", " : "") + ("h(" + std::to_string(n) + ") = " + v);
    }
    report(3, "h-constant table", ok, d);
  }

  // 4
  RunConfig cfg;
  cfg.seed = kSeed;
  auto t4 = std::chrono::steady_clock::now();
  auto reports = run_checks(catalog, cfg);
  double sweep = seconds_since(t4);
  {
    std::size_t counts[4] = {0, 0, 0, 0}, unnamed = 0, background = 0;
    for (const auto& r : reports) {
      ++counts[static_cast<int>(r.verdict)];
      if (r.verdict != Verdict::Vacuous) continue;
      bool named = false;
      for (const auto& h : r.hypotheses) named = named || h.status == Status::Fails;
      bool noted = false;
      for (const auto& n : r.notes) noted = noted || n.rfind("failing hypotheses: (", 0) == 0;
      if (!named || !noted) ++unnamed;
    }
    for (const auto& inst : catalog) {
      Analysis a(inst.action(), cfg.caps, cfg.seed);
      background += background_violations(a).size();
    }
    std::ostringstream d;
    d << catalog.size() << " instances x 18 theorems = " << reports.size() << " reports in " << sweep << " s: "
      << counts[0] << " verified, " << counts[1] << " vacuous, " << counts[2] << " counterexample, " << counts[3]
      << " skipped; " << unnamed << " vacuous without a named failing hypothesis; " << background
      << " background-invariant violations";
    report(4, "theorem soundness sweep",
           reports.size() == catalog.size() * 18 && counts[2] == 0 && unnamed == 0 && background == 0 &&
               batch.instances.size() >= 500,
           d.str());
  }

  // 5
  {
    const auto* r = find_report(reports, TheoremId::N1, "F4-zero");
    bool ok = r && hyp(*r, "1") && hyp(*r, "2") && hyp(*r, "3");
    std::string d = "missing report";
    if (ok) {
      Analysis a(find_named("F4-zero")->action());
      const auto& bp = a.bad_primes();
      ok = hyp(*r, "1")->status == Status::Holds && hyp(*r, "2")->status == Status::Holds &&
           hyp(*r, "3")->status == Status::Holds && bp.list() == std::vector<std::int64_t>{2} &&
           bp.primes[0].complement && bp.primes[0].complement->size() == 3 && bp.primes[0].d == std::size_t(1) &&
           a.nilpotency().index == std::size_t(2) && r->conclusion.status == Status::HoldsDominated &&
           r->verdict == Verdict::Verified;
      d = std::string("hypotheses ") + to_string(hyp(*r, "1")->status) + "/" + to_string(hyp(*r, "2")->status) + "/" +
          to_string(hyp(*r, "3")->status) + ", |N(2)| = " +
          (bp.primes[0].complement ? std::to_string(bp.primes[0].complement->size()) : "none") +
          " (C3, the unique group of order 3), d(2) = " + (bp.primes[0].d ? std::to_string(*bp.primes[0].d) : "none") +
          ", nilpotency index " + (a.nilpotency().index ? std::to_string(*a.nilpotency().index) : "none") +
          ", conclusion " + to_string(r->conclusion.status) + ", verdict " + to_string(r->verdict);
    }
    report(5, "N1 positive instance", ok, d);
  }

  // 6
  {
    const auto* r = find_report(reports, TheoremId::BI_1_4, "F3^2-zero");
    bool ok = r && hyp(*r, "1") && hyp(*r, "2");
    std::string d = "missing report";
    if (ok) {
      Analysis a(find_named("F3^2-zero")->action());
      auto k = a.nilpotency().index;
      ok = hyp(*r, "1")->status == Status::Holds && hyp(*r, "2")->status == Status::Holds &&
           r->conclusion.status == Status::HoldsDominated && r->verdict == Verdict::Verified && k == std::size_t(2) &&
           BoundExpr{h_constant(2), 1, 1}.at_least(*k);
      d = std::string("|G|-torsion free: ") + to_string(hyp(*r, "1")->status) + ", t(R)^d = 0: " +
          to_string(hyp(*r, "2")->status) + " (" + hyp(*r, "2")->witness.value_or("") +
          "; t(R) is the nonzero diagonal and t(R)^2 = 0), nilpotency index " + std::to_string(k.value_or(0)) +
          " <= h(2) = 6 so R^6 = 0, conclusion " + to_string(r->conclusion.status) + ", verdict " +
          to_string(r->verdict);
    }
    report(6, "trace nilpotency bound desk check", ok, d);
  }

  // 7
  {
    const auto* pos = find_report(reports, TheoremId::RAD_1_4, "F3xF3");
    const auto* neg = find_report(reports, TheoremId::RAD_1_4, "M2(F2)");
    bool ok = pos && neg;
    std::string d = "missing report";
    if (ok) {
      auto m = find_named("M2(F2)");
      Analysis a(m->action());
      auto f2 = cyclic_ring(2);
      Elem e12 = matrix_element(a.ring(), f2, 2, {0, 1, 0, 0});
      Analysis b(find_named("F3xF3")->action());
      std::string failed;
      for (const auto& n : neg->notes)
        if (n.rfind("failing hypotheses: ", 0) == 0) failed = n;
      bool recorded = false;
      for (const auto& n : neg->notes) recorded = recorded || n.find("left side {(0,0,0,0),(0,1,0,0)}") != std::string::npos;
      ok = pos->verdict == Verdict::Verified && b.jacobson_radical().is_zero() && b.fixed_jacobson_radical().is_zero() &&
           neg->verdict == Verdict::Vacuous && a.fixed_jacobson_radical().elements() == std::vector<Elem>{0, e12} &&
           intersect(a.jacobson_radical(), a.fixed()).is_zero() && neg->conclusion.status == Status::Fails &&
           recorded && !failed.empty();
      d = std::string("F3xF3: ") + to_string(pos->verdict) + "; M2(F2): rad(R^G) = " +
          format_subgroup(a.ring(), a.fixed_jacobson_radical()) + " (0 and e12), rad(R) cap R^G = " +
          format_subgroup(a.ring(), intersect(a.jacobson_radical(), a.fixed())) + ", verdict " +
          to_string(neg->verdict) + ", " + failed;
    }
    report(7, "rad-equality pair", ok, d);
  }

  // 8
  {
    std::size_t exhaustive = 0, hyps_hold = 0, violations = 0, semiprime_checked = 0, semiprime_violations = 0;
    for (const auto& inst : catalog) {
      Analysis a(inst.action(), cfg.caps, cfg.seed);
      bool ex = true;
      for (Side s : {Side::Left, Side::Right}) ex = ex && a.udim(s).exhaustive && a.fixed_udim(s).exhaustive;
      if (!ex) continue;
      ++exhaustive;
      auto inequality = [&] {
        for (Side s : {Side::Left, Side::Right}) {
          auto u = a.udim(s).value, f = a.fixed_udim(s).value;
          if (!(f <= u && u <= a.n() * f)) return false;
        }
        return true;
      };
      auto r = check(TheoremId::COR_A8, a);
      bool hold = std::all_of(r.hypotheses.begin(), r.hypotheses.end(), [](const Clause& c) { return c.status == Status::Holds; });
      if (hold) {
        ++hyps_hold;
        if (!inequality()) ++violations;
      }
      // companion evidence: semiprime rings with |G| invertible
      if (a.prime_radical().is_zero() && a.order_invertible()) {
        ++semiprime_checked;
        if (!inequality()) ++semiprime_violations;
      }
    }
    auto f3 = find_named("F3xF3");
    Analysis b(f3->action());
    auto diag = subring_ring(b.ring(), b.fixed(), "diag");
    auto m2 = find_named("M2(F2)");
    auto u_f3 = uniform_dimension(b.ring(), Side::Left).value;
    auto u_diag = uniform_dimension(diag.ring, Side::Left).value;
    auto u_m2 = uniform_dimension(m2->ring, Side::Left).value;
    bool ok = violations == 0 && u_f3 == 2 && u_diag == 1 && u_m2 == 2;
    std::ostringstream d;
    d << exhaustive << " instances with exhaustive udim; COR_A8 hypotheses hold on " << hyps_hold << " of them with "
      << violations << " violations (finite semiprime rings with a bad prime never have |G|-torsion-free invariants); "
      << "semiprime with |G| invertible: " << semiprime_violations << " violations in " << semiprime_checked
      << "; udim(F3xF3) = " << u_f3 << ", udim(diag) = " << u_diag << ", udim_left(M2(F2)) = " << u_m2;
    report(8, "udim bounds", ok, d.str());
  }

  // 9
  {
    std::size_t with_split = 0, with_proper = 0, b6_bad = 0, c6_bad = 0, large = 0;
    std::string first_bad;
    for (const auto& inst : catalog) {
      if (inst.ring.order() > 256) {
        ++large;
        continue;
      }
      const auto* b6 = find_report(reports, TheoremId::LEM_B6, inst.ring.name());
      const auto* c6 = find_report(reports, TheoremId::LEM_C6, inst.ring.name());
      if (b6 && hyp(*b6, "1")->status == Status::Holds) {
        ++with_split;
        if (b6->verdict != Verdict::Verified) {
          ++b6_bad;
          if (first_bad.empty()) first_bad = "LEM_B6 on " + inst.name + ": " + to_string(b6->verdict);
        }
      }
      if (c6 && hyp(*c6, "1")->status == Status::Holds) {
        ++with_proper;
        if (c6->verdict != Verdict::Verified) {
          ++c6_bad;
          if (first_bad.empty()) first_bad = "LEM_C6 on " + inst.name + ": " + to_string(c6->verdict);
        }
      }
    }
    std::ostringstream d;
    d << "J^er = J on " << with_split - b6_bad << "/" << with_split << " instances with a splitting; (RJ+I) cap R^G = J on "
      << with_proper - c6_bad << "/" << with_proper << " instances with a proper splitting (exhaustive lattices)";
    if (!first_bad.empty()) d << "; first failure " << first_bad;
    report(9, "lemma suite", with_split > 0 && with_proper > 0 && b6_bad == 0 && c6_bad == 0 && large == 0, d.str());
  }

  // 10
  {
    auto again = random_instances(RandomParams{kMaxOrder, kRandom, kSeed, 0, 3});
    bool same_catalog = format_instances(again.instances) == format_instances(batch.instances);
    RunConfig par = cfg;
    par.jobs = 4;
    std::string first = to_json(reports).dump();
    std::string second = to_json(run_checks(catalog, cfg)).dump();
    std::string third = to_json(run_checks(catalog, par)).dump();
    bool ok = same_catalog && first == second && first == third;
    std::ostringstream d;
    d << "catalog regeneration " << (same_catalog ? "identical" : "differs") << "; report of " << first.size()
      << " bytes " << (first == second ? "identical" : "differs") << " on rerun and "
      << (first == third ? "identical" : "differs") << " with 4 jobs";
    report(10, "determinism", ok, d.str());
  }

  // 11
  {
    auto named = named_instances();
    std::string text = format_instances(named);
    auto path = (std::filesystem::temp_directory_path() / "ringinv_acceptance_catalog.ring").string();
    save_instances(path, named);
    auto loaded = load_instances(path);
    std::string again = format_instances(loaded);
    bool tags = loaded.size() == named.size();
    for (std::size_t i = 0; tags && i < named.size(); ++i) tags = loaded[i].tags == named[i].tags;
    bool ok = again == text && tags;
    std::ostringstream d;
    d << named.size() << " named instances, " << text.size() << " bytes, save(load(file)) "
      << (again == text ? "byte-identical" : "differs") << ", re-derived tags " << (tags ? "match" : "differ");
    report(11, "round-trip", ok, d.str());
    std::filesystem::remove(path);
  }

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all 11 criteria passed"))
            << ", total " << seconds_since(t0) << " s\n";
  return failures ? 1 : 0;
}
