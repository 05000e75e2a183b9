#include "ringinv/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace ringinv {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::size_t parse_positive(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": not a number: " + s);
  }
  if (used != s.size() || v == 0) throw std::invalid_argument(what + ": expected a positive integer: " + s);
  return static_cast<std::size_t>(v);
}

char glyph(Verdict v) {
  switch (v) {
    case Verdict::Verified: return 'V';
    case Verdict::Vacuous: return '.';
    case Verdict::Counterexample: return 'X';
    case Verdict::Skipped: return '?';
  }
  return ' ';
}

std::string list_subgroup(const FiniteRing& r, const Subgroup& s) { return format_subgroup(r, s); }

}  // namespace

void parse_caps(const std::string& text, Caps& caps) {
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("caps: expected k=v, got " + item);
    std::string key = item.substr(0, eq);
    if (!caps.set(key, parse_positive(item.substr(eq + 1), "caps " + key)))
      throw std::invalid_argument("caps: unknown cap " + key);
  }
}

std::vector<TheoremId> parse_theorems(const std::string& text) {
  if (text == "all") return all_theorems();
  std::vector<TheoremId> out;
  for (const auto& name : split(text, ',')) {
    auto id = theorem_from_string(name);
    if (!id) throw std::invalid_argument("unknown theorem " + name);
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<TheoremId, std::string> parse_mask(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("mask: expected THEOREM:hypothesis, got " + text);
  auto id = theorem_from_string(text.substr(0, colon));
  if (!id) throw std::invalid_argument("mask: unknown theorem " + text.substr(0, colon));
  std::string h = text.substr(colon + 1);
  if (h.empty()) throw std::invalid_argument("mask: empty hypothesis id");
  return {*id, h};
}

void apply_environment(RunConfig& cfg, const std::function<const char*(const char*)>& getenv) {
  if (const char* v = getenv("RINGINV_CAPS")) parse_caps(v, cfg.caps);
  if (const char* v = getenv("RINGINV_SEED")) cfg.seed = std::stoull(v);
  if (const char* v = getenv("RINGINV_JOBS")) cfg.jobs = parse_positive(v, "RINGINV_JOBS");
  if (const char* v = getenv("RINGINV_THEOREMS")) cfg.theorems = parse_theorems(v);
  if (const char* v = getenv("RINGINV_MASK"))
    for (const auto& m : split(v, ',')) cfg.masks.insert(parse_mask(m));
  if (const char* v = getenv("RINGINV_OUT")) cfg.out = v;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    auto list = load_instances(path);
    for (const auto& inst : list)
      out << inst.name << ": valid, order " << inst.ring.order() << ", group " << inst.group.name() << " of order "
          << inst.group.order() << "\n";
    return kOk;
  } catch (const ParseError& e) {
    err << path << ": parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << path << ": validation error: " << e.what();
    if (!e.witness().empty()) {
      err << " (generators";
      for (auto w : e.witness()) err << " " << w;
      err << ")";
    }
    err << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    return kParseError;
  }
}

std::vector<TheoremReport> run_checks(const std::vector<Instance>& instances, const RunConfig& cfg) {
  std::vector<std::vector<TheoremReport>> per(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < instances.size();) {
      Analysis a(instances[i].action(), cfg.caps, cfg.seed);
      per[i] = check_all(a, cfg.theorems, cfg.masks);
    }
  };
  std::vector<std::thread> workers;
  for (std::size_t w = 1; w < std::max<std::size_t>(cfg.jobs, 1); ++w) workers.emplace_back(work);
  work();
  for (auto& t : workers) t.join();
  std::vector<TheoremReport> all;
  for (auto& v : per)
    for (auto& r : v) all.push_back(std::move(r));
  sort_reports(all);
  return all;
}

int cmd_check(const std::vector<Instance>& instances, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto reports = run_checks(instances, cfg);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "cannot write " << cfg.out << "\n";
      return kUsage;
    }
    f << to_json(reports).dump(2) << "\n";
  }
  // table: one row per instance, one column per theorem
  std::map<std::pair<std::string, std::string>, std::map<TheoremId, Verdict>> cells;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) {
    cells[{r.ring, r.group}][r.theorem] = r.verdict;
    ++counts[static_cast<int>(r.verdict)];
  }
  std::size_t width = 8;
  for (const auto& inst : instances) width = std::max(width, inst.ring.name().size() + inst.group.name().size() + 3);
  out << "columns:";
  for (std::size_t i = 0; i < cfg.theorems.size(); ++i) out << " " << i + 1 << "=" << to_string(cfg.theorems[i]);
  out << "\n" << std::left << std::setw(static_cast<int>(width)) << "instance";
  for (std::size_t i = 0; i < cfg.theorems.size(); ++i) out << std::setw(3) << i + 1;
  out << "\n";
  std::set<std::pair<std::string, std::string>> shown;
  for (const auto& inst : instances) {
    auto key = std::make_pair(inst.ring.name(), inst.group.name());
    if (!shown.insert(key).second) continue;
    out << std::setw(static_cast<int>(width)) << (key.first + " / " + key.second);
    for (auto id : cfg.theorems) out << std::setw(3) << glyph(cells[key][id]);
    out << "\n";
  }
  out << "V verified " << counts[0] << ", . vacuous " << counts[1] << ", X counterexample " << counts[2]
      << ", ? skipped " << counts[3] << "\n";
  for (const auto& r : reports)
    if (r.verdict == Verdict::Counterexample)
      out << "counterexample: " << to_string(r.theorem) << " on " << r.ring << " / " << r.group << ": "
          << r.conclusion.witness.value_or("") << "\n";
  return counts[2] ? kCounterexample : kOk;
}

void cmd_profile(const Instance& inst, const Caps& caps, std::ostream& out) {
  Analysis a(inst.action(), caps);
  const FiniteRing& r = a.ring();
  out << "instance: " << inst.name << "\n";
  out << "order: " << r.order() << " (Z/";
  const auto& d = r.additive().orders();
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " + Z/" : "") << d[i];
  out << ")\n";
  out << "unital: " << (r.is_unital() ? "yes, 1 = " + format_element(r, *r.identity()) : std::string("no")) << "\n";
  out << "group: " << inst.group.name() << " of order " << a.n() << "\n";
  out << "n(R): " << list_subgroup(r, a.prime_radical()) << "\n";
  out << "rad(R): " << list_subgroup(r, a.jacobson_radical()) << "\n";
  out << "R^G: " << list_subgroup(r, a.fixed()) << "\n";
  out << "trace image: " << list_subgroup(r, a.trace_image()) << "\n";
  for (auto p : prime_factors(static_cast<std::int64_t>(a.n())))
    out << "tor_" << p << "(R): " << list_subgroup(r, torsion_ideal(r, p).sub) << "\n";
  out << "B(R,G): {";
  auto bad = a.bad_primes().list();
  for (std::size_t i = 0; i < bad.size(); ++i) out << (i ? ", " : "") << bad[i];
  out << "}\n";
  for (const auto& bp : a.bad_primes().primes) {
    out << "N(" << bp.p << "): ";
    if (!bp.complement) {
      out << "none\n";
      continue;
    }
    out << "order " << bp.complement->size() << ", R^N(p) = " << list_subgroup(r, *bp.complement_fixed)
        << ", relative trace image " << list_subgroup(r, *bp.relative_trace_image) << ", d(p) = "
        << (bp.d ? std::to_string(*bp.d) : bp.never_nilpotent ? "none (not nilpotent)" : "> " + std::to_string(bp.d_cap))
        << "\n";
  }
  const auto& sp = a.splittings();
  out << "averaging idempotent e: " << (a.averaging() ? "exists" : "none (|G| not invertible)") << "\n";
  out << "splittings: " << sp.found.size() << " found" << (sp.exhaustive ? " (exhaustive)" : " (search capped)") << "\n";
  if (!sp.found.empty()) out << "first complement B: " << list_subgroup(r, sp.found[0].complement) << "\n";
  for (Side side : {Side::Left, Side::Right}) {
    Tri t = a.proper_splitting_group(side);
    out << "proper splitting (" << to_string(side) << "): " << (t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "undecided")
        << "\n";
  }
  for (Side side : {Side::Left, Side::Right}) {
    const auto& u = a.udim(side);
    const auto& f = a.fixed_udim(side);
    out << "udim (" << to_string(side) << "): R " << u.value << (u.exhaustive ? "" : "+") << ", R^G " << f.value
        << (f.exhaustive ? "" : "+") << "\n";
  }
  out << "tags:";
  for (const auto& t : inst.tags) out << " " << t;
  out << "\n";
}

int cmd_catalog(const std::vector<Instance>& instances, const std::string& path, std::uint64_t seed,
                std::ostream& out) {
  for (const auto& inst : instances) {
    out << inst.name << " / " << inst.group.name() << " (|G| = " << inst.group.order() << "): "
        << fingerprint(inst.ring).to_string() << "\n  tags:";
    for (const auto& t : inst.tags) out << " " << t;
    out << "\n";
  }
  if (!path.empty()) {
    save_instances(path, instances);
    nlohmann::ordered_json m;
    m["file"] = path;
    m["seed"] = seed;
    m["members"] = nlohmann::ordered_json::array();
    for (const auto& inst : instances) {
      nlohmann::ordered_json e;
      e["name"] = inst.name;
      e["group"] = inst.group.name();
      e["provenance"] = inst.provenance;
      e["fingerprint"] = fingerprint(inst.ring).to_string();
      e["tags"] = inst.tags;
      m["members"].push_back(e);
    }
    std::ofstream f(path + ".manifest.json");
    f << m.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace ringinv
