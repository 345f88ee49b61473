#include <doctest.h>

#include "smw/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace smw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("smw-cache-test-" + std::to_string(std::rand()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<fs::path> json_files(const fs::path& d) {
  std::vector<fs::path> out;
  if (!fs::exists(d)) return out;
  for (const auto& e : fs::directory_iterator(d))
    if (e.path().extension() == ".json") out.push_back(e.path());
  return out;
}

}  // namespace

TEST_CASE("counts survive a save and load") {
  TempDir tmp;
  CountCache cache(tmp.path);
  auto m = ModelSpec::s31(1);
  CountTable a(m);
  a.prefetch(1, {5, 12});
  a.prefetch(2, {30}, false, true);
  cache.save(a);
  REQUIRE(json_files(tmp.path).size() == 1);

  CountTable b(m);
  CHECK(cache.load(b) == 3);
  CHECK_FALSE(b.dirty());
  CHECK(b.count(12, 0, 1, 1) == a.count(12, 0, 1, 1));
  CHECK(b.count(12, 3, 1, 3) == a.count(12, 3, 1, 3));
  CHECK(b.contains(30, 2, false, false));
  CHECK_FALSE(b.contains(30, 2, false, true));
  CHECK(b.count(30, 0, 2, 2) == count(m, 30, 0, 2, 2));
  CHECK(b.count(30, 2, 2, 3) == count(m, 30, 2, 2, 3));
}

TEST_CASE("models do not share cache files") {
  TempDir tmp;
  CountCache cache(tmp.path);
  CountTable a(ModelSpec::s31(0));
  a.prefetch(1, {6});
  cache.save(a);
  CountTable b(ModelSpec::s21());
  CHECK(cache.load(b) == 0);
}

TEST_CASE("unreadable files are deleted and recomputed") {
  TempDir tmp;
  CountCache cache(tmp.path);
  auto m = ModelSpec::s31(0);
  CountTable a(m);
  a.prefetch(1, {8});
  cache.save(a);
  auto files = json_files(tmp.path);
  REQUIRE(files.size() == 1);

  for (const char* junk : {"{not json", "{\"model\": \"other\", \"entries\": []}",
                           "{\"model\": \"@\", \"entries\": [{\"n\": 3, \"h\": 9}]}"}) {
    std::string text = junk;
    if (auto p = text.find('@'); p != std::string::npos) text.replace(p, 1, m.count_tag());
    std::ofstream(files[0]) << text;
    CountTable b(m);
    CountCache fresh(tmp.path);
    CHECK(fresh.load(b) == 0);
    CHECK(fresh.invalidated() == 1);
    CHECK_FALSE(fs::exists(files[0]));
    CHECK(b.count(8, 0, 1, 1) == 1071);
    fresh.save(b);
    files = json_files(tmp.path);
    REQUIRE(files.size() == 1);
  }
}

TEST_CASE("environment overrides the cache flag") {
  ::unsetenv("SMW_CACHE_DIR");
  CHECK(CountCache::resolve_dir("flagdir") == fs::path("flagdir"));
  ::setenv("SMW_CACHE_DIR", "/tmp/envdir", 1);
  CHECK(CountCache::resolve_dir("flagdir") == fs::path("/tmp/envdir"));
  ::unsetenv("SMW_CACHE_DIR");
}
