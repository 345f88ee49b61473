#pragma once

#include "smw/counting.hpp"

#include <filesystem>
#include <string>

namespace smw {

// JSON files of exact counts, one per (model, n_max):
//   {model, n_max, entries: [{n, h, a, b, tilde, value, entry?}]}
// Integers are stored as decimal strings. Unreadable files are deleted and
// the counts recomputed.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);

  // --cache-dir value unless SMW_CACHE_DIR is set.
  static std::filesystem::path resolve_dir(const std::string& flag_value);

  const std::filesystem::path& dir() const { return dir_; }
  // Returns the number of rows merged into the table.
  int load(CountTable& table) const;
  void save(CountTable& table) const;
  int invalidated() const { return invalidated_; }

 private:
  std::filesystem::path dir_;
  mutable int invalidated_ = 0;
};

}  // namespace smw
