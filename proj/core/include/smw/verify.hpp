#pragma once

#include "smw/cache.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace smw::verify {

enum class Suite { Smoke, Full };
Suite parse_suite(const std::string& s);
std::string to_string(Suite s);

struct Config {
  Suite suite = Suite::Smoke;
  std::optional<CountCache> cache;
  std::function<void(const std::string&)> note;  // progress lines, may be empty
};

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;          // what was checked
  std::string counterexample;  // first failure
  double seconds = 0;
};

int criterion_count();
std::string criterion_title(int id);
Result run_criterion(int id, Config& cfg);
std::vector<Result> run_all(Config& cfg, const std::vector<int>& only = {});

// "PASS C05 ..." line without timing
std::string summary_line(const Result& r);

}  // namespace smw::verify
