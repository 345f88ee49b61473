#include "smw/cache.hpp"

#include "json.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>

namespace smw {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class FileLock {
 public:
  explicit FileLock(const fs::path& p) {
    fd_ = ::open(p.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

std::string prefix(const ModelSpec& m) { return "counts_" + m.count_tag() + "_n"; }

}  // namespace

CountCache::CountCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CountCache::resolve_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("SMW_CACHE_DIR"); env && *env) return fs::path(env);
  return fs::path(flag_value);
}

int CountCache::load(CountTable& table) const {
  if (dir_.empty() || !fs::is_directory(dir_)) return 0;
  const auto& m = table.model();
  const std::string pre = prefix(m);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir_)) {
    auto name = e.path().filename().string();
    if (name.rfind(pre, 0) == 0 && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  auto labels = end_labels(m);
  int merged = 0;
  for (const auto& f : files) {
    std::map<CountTable::Key, CountRow> rows;
    try {
      std::ifstream in(f);
      json doc = json::parse(in);
      if (doc.at("model").get<std::string>() != m.count_tag())
        throw std::runtime_error("model mismatch");
      if (doc.contains("partial"))
        for (const auto& p : doc.at("partial")) {
          auto& r = rows[{p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<bool>()}];
          r.a = p.at(0).get<int>();
          r.n = p.at(1).get<int>();
          r.tilde = p.at(2).get<bool>();
          r.labels = labels;
          r.complete = false;
        }
      for (const auto& e : doc.at("entries")) {
        int n = e.at("n").get<int>(), h = e.at("h").get<int>();
        int a = e.at("a").get<int>(), b = e.at("b").get<int>();
        bool tilde = e.at("tilde").get<bool>();
        int entry = e.contains("entry") ? e.at("entry").get<int>() : 0;
        BigInt value(e.at("value").get<std::string>());
        EndLabel lab{b, entry};
        auto it = std::find(labels.begin(), labels.end(), lab);
        if (it == labels.end() || n < 0 || h < 0 || h > n || value < 0 || a < 1 || a > m.k())
          throw std::runtime_error("entry out of range");
        auto& r = rows[{a, n, tilde}];
        r.n = n;
        r.a = a;
        r.tilde = tilde;
        r.labels = labels;
        if (!r.complete && h > 0) throw std::runtime_error("height beyond a partial row");
        if (static_cast<int>(r.by_height.size()) <= h)
          r.by_height.resize(h + 1, std::vector<BigInt>(labels.size(), BigInt(0)));
        r.by_height[h][it - labels.begin()] = value;
      }
    } catch (const std::exception&) {
      std::error_code ec;
      fs::remove(f, ec);
      ++invalidated_;
      continue;
    }
    for (auto& [key, r] : rows) {
      if (!table.contains(r.n, r.a, r.tilde, r.complete)) {
        if (r.by_height.empty()) r.by_height.assign(1, std::vector<BigInt>(labels.size(), BigInt(0)));
        table.insert(std::move(r));
        ++merged;
      }
    }
  }
  table.mark_clean();
  return merged;
}

void CountCache::save(CountTable& table) const {
  if (dir_.empty() || !table.dirty()) return;
  fs::create_directories(dir_);
  const auto& m = table.model();
  FileLock lock(dir_ / ".lock");
  json doc;
  doc["model"] = m.count_tag();
  doc["n_max"] = table.max_length();
  json entries = json::array();
  json partial = json::array();
  for (const auto& [key, r] : table.rows()) {
    if (!r.complete) partial.push_back(json::array({r.a, r.n, r.tilde}));
    for (int h = 0; h <= r.max_h(); ++h)
      for (std::size_t l = 0; l < r.labels.size(); ++l) {
        const auto& v = r.by_height[h][l];
        if (v == 0) continue;
        json e{{"n", r.n}, {"h", h}, {"a", r.a}, {"b", r.labels[l].index}, {"tilde", r.tilde},
               {"value", v.str()}};
        if (r.labels[l].entry) e["entry"] = r.labels[l].entry;
        entries.push_back(std::move(e));
      }
  }
  doc["entries"] = std::move(entries);
  if (!partial.empty()) doc["partial"] = std::move(partial);
  fs::path target = dir_ / (prefix(m) + std::to_string(table.max_length()) + ".json");
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump();
  }
  fs::rename(tmp, target);
  table.mark_clean();
}

}  // namespace smw
