#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "superbethe/superbethe.h"

namespace {

struct Flags {
  std::string config;
  std::map<std::string, std::string> values;
};

int fail_config(const char* what) {
  std::cerr << "error: " << what << ": " << sb_last_error() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic Bethe ansatz verification campaigns for sl(r+1|s+1)"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--config", flags.config, "key = value configuration file");
  const std::pair<const char*, const char*> options[] = {
      {"--preset", "preset"},           {"--r", "r"},
      {"--s", "s"},                     {"--q", "q"},
      {"--seed", "seed"},               {"--shapes", "shapes"},
      {"--n-sites", "n_sites"},         {"--sector", "sector"},
      {"--tol", "tol"},                 {"--out", "out"},
      {"--random-shapes", "random_shapes"}, {"--homogeneous", "homogeneous"},
      {"--corrupt-root", "corrupt_root"},   {"--a-max", "a_max"},
      {"--lattice-sites", "lattice_sites"}, {"--max-index", "max_index"},
  };
  for (const auto& [flag, key] : options) {
    app.add_option_function<std::string>(flag, [&flags, key = std::string(key)](const std::string& v) { flags.values[key] = v; },
                                         std::string("overrides '") + key + "'");
  }

  const std::pair<const char*, const char*> commands[] = {
      {"verify-jt", "jt"},
      {"verify-hirota", "hirota"},
      {"verify-reductions", "reductions"},
      {"verify-vanishing", "vanishing"},
      {"verify-polefree", "pole-audit"},
      {"verify-lattice", "lattice"},
      {"verify-crossing", "crossing"},
      {"verify-mixed", "mixed"},
      {"verify-ab", "ab"},
      {"verify-topterm", "top-term"},
      {"solve-bae", "solve-bae"},
      {"verify-all", "all"},
  };
  std::map<CLI::App*, std::string> check_of;
  for (const auto& [name, check] : commands) check_of[app.add_subcommand(name, std::string("run the ") + check + " checks")] = check;
  CLI::App* run = app.add_subcommand("run", "run the checks listed in the configuration");

  CLI11_PARSE(app, argc, argv);

  sb_campaign* c = nullptr;
  if (sb_campaign_create(&c) != SB_OK) return fail_config("create");
  struct Closer {
    sb_campaign* c;
    ~Closer() { sb_campaign_destroy(c); }
  } closer{c};

  if (!flags.config.empty() && sb_campaign_load_file(c, flags.config.c_str()) != SB_OK) return fail_config("config");
  for (const auto& [key, value] : flags.values) {
    if (sb_campaign_set(c, key.c_str(), value.c_str()) != SB_OK) return fail_config(key.c_str());
  }
  for (const auto& [sub, check] : check_of) {
    if (sub->parsed() && sb_campaign_set(c, "checks", check.c_str()) != SB_OK) return fail_config("checks");
  }
  (void)run;

  int passed = 0;
  const sb_status st = sb_campaign_run(c, &passed);
  if (st != SB_OK) {
    std::cerr << "error: " << sb_status_string(st) << ": " << sb_last_error() << "\n";
    return 2;
  }

  const char* out = nullptr;
  sb_campaign_get(c, "out", &out);
  const std::string path = out == nullptr ? "" : out;
  std::size_t n_pass = 0;
  std::size_t n_fail = 0;
  std::size_t n_skip = 0;
  sb_campaign_counts(c, &n_pass, &n_fail, &n_skip);
  if (path.empty()) {
    std::cout << sb_campaign_report(c);
  } else {
    std::ofstream f(path);
    if (!f) {
      std::cerr << "error: cannot write " << path << "\n";
      return 2;
    }
    f << sb_campaign_report(c);
  }
  std::cerr << "pass=" << n_pass << " fail=" << n_fail << " skip=" << n_skip << "\n";
  return passed != 0 ? 0 : 1;
}
