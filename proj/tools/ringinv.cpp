// ringinv: validate instance files, build catalogs, check theorems, profile instances.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "ringinv/cli.hpp"

using namespace ringinv;

namespace {

struct Sources {
  std::vector<std::string> files;
  bool named = false;
  std::size_t random = 0;
  std::uint64_t max_order = 64;
};

/// Collects instances; returns an exit code on load failure.
int gather(const Sources& src, std::uint64_t seed, std::size_t jobs, std::vector<Instance>& out) {
  for (const auto& f : src.files) {
    int code = 0;
    try {
      auto list = load_instances(f);
      out.insert(out.end(), list.begin(), list.end());
    } catch (const ParseError& e) {
      std::cerr << f << ": parse error: " << e.what() << "\n";
      code = kParseError;
    } catch (const ValidationError& e) {
      std::cerr << f << ": validation error: " << e.what() << "\n";
      code = kValidationError;
    } catch (const std::exception& e) {
      std::cerr << f << ": " << e.what() << "\n";
      code = kParseError;
    }
    if (code) return code;
  }
  if (src.named) {
    auto list = named_instances();
    out.insert(out.end(), list.begin(), list.end());
  }
  if (src.random) {
    auto batch = random_instances(RandomParams{src.max_order, src.random, seed, 0, jobs});
    std::cerr << "random instances: " << batch.instances.size() << " from " << batch.attempted << " attempts ("
              << batch.valid << " valid rings; raw tables " << batch.table_valid << "/" << batch.table_attempts
              << " valid; " << batch.rigid << " without a nontrivial automorphism)\n";
    out.insert(out.end(), batch.instances.begin(), batch.instances.end());
  }
  return kOk;
}

void add_sources(CLI::App* cmd, Sources& src) {
  cmd->add_option("files", src.files, "instance files");
  cmd->add_flag("--named", src.named, "include the named catalog");
  cmd->add_option("--random", src.random, "number of seeded random instances");
  cmd->add_option("--max-order", src.max_order, "order bound for random instances (at most 256)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks on finite rings with finite automorphism groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string caps_text, theorems_text;
  std::vector<std::string> masks;
  Sources src;

  auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
  std::string validate_path;
  validate->add_option("file", validate_path)->required();

  auto* catalog = app.add_subcommand("catalog", "list or write a catalog");
  add_sources(catalog, src);

  auto* check = app.add_subcommand("check", "run theorem checks");
  add_sources(check, src);

  auto* profile = app.add_subcommand("profile", "print the invariants of one instance");
  std::string target;
  profile->add_option("instance", target, "named instance or file (first instance is used)")->required();

  for (auto* cmd : {catalog, check, profile}) {
    cmd->add_option("--caps", caps_text, "k=v,... (ideal_scan, dp, nilpotency, udim, group, splittings, "
                                         "splitting_nodes, ideal_count, samples)");
    cmd->add_option("--seed", cfg.seed);
    cmd->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.out);
  }
  check->add_option("--theorems", theorems_text, "id,id,... or all");
  check->add_option("--mask", masks, "THEOREM:hypothesis, repeatable");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(validate_path, std::cout, std::cerr);

    // flags override the RINGINV_ environment, which overrides defaults
    RunConfig flags = cfg;
    cfg = RunConfig{};
    apply_environment(cfg, [](const char* k) { return std::getenv(k); });
    if (!caps_text.empty()) parse_caps(caps_text, cfg.caps);
    for (auto* cmd : {catalog, check, profile}) {
      if (!*cmd) continue;
      if (cmd->count("--seed")) cfg.seed = flags.seed;
      if (cmd->count("--jobs")) cfg.jobs = flags.jobs;
      if (cmd->count("--out")) cfg.out = flags.out;
    }
    if (!theorems_text.empty()) cfg.theorems = parse_theorems(theorems_text);
    for (const auto& m : masks) cfg.masks.insert(parse_mask(m));

    if (*profile) {
      std::optional<Instance> inst;
      if (std::filesystem::exists(target)) {
        std::vector<Instance> list;
        if (int code = gather(Sources{{target}, false, 0, 64}, cfg.seed, 1, list)) return code;
        if (!list.empty()) inst = list.front();
      } else {
        inst = find_named(target);
      }
      if (!inst) {
        std::cerr << "no instance " << target << "\n";
        return kUsage;
      }
      cmd_profile(*inst, cfg.caps, std::cout);
      return kOk;
    }

    std::vector<Instance> instances;
    if (int code = gather(src, cfg.seed, cfg.jobs, instances)) return code;
    if (*catalog) return cmd_catalog(instances, cfg.out, cfg.seed, std::cout);
    return cmd_check(instances, cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
