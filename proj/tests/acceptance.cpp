// One line per criterion; exit status 1 when any criterion fails.
#include "smw/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string suite = "smoke";
  std::string cache_dir;
  std::vector<int> only;
  bool verbose = false;
  app.add_option("--suite", suite, "smoke or full")->check(CLI::IsMember({"smoke", "full"}));
  app.add_option("--cache-dir", cache_dir, "count cache directory");
  app.add_option("--only", only, "criterion ids");
  app.add_flag("-v,--verbose", verbose, "progress lines");
  CLI11_PARSE(app, argc, argv);

  smw::verify::Config cfg;
  cfg.suite = smw::verify::parse_suite(suite);
  if (!cache_dir.empty()) cfg.cache.emplace(cache_dir);
  if (verbose) cfg.note = [](const std::string& s) { std::cerr << "  .. " << s << '\n'; };

  auto results = smw::verify::run_all(cfg, only);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << smw::verify::summary_line(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed (" << suite << ")\n";
  return failed ? 1 : 0;
}
