#pragma once

#include "smw/model.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace smw {

// Exact counts of walks of length n from index a, resolved by end height
// and end label.
struct CountRow {
  int n = 0;
  int a = 1;
  bool tilde = false;
  std::vector<EndLabel> labels;
  std::vector<std::vector<BigInt>> by_height;  // [h][label position]
  bool complete = true;                        // false: only h = 0 is valid

  int max_h() const { return static_cast<int>(by_height.size()) - 1; }
  BigInt at(int h, int b) const;
  BigInt at_label(int h, const EndLabel& l) const;
};

// One transfer-matrix sweep from index a; returns a row for every length
// requested. With `last_zero_only` the longest row is only needed at
// h = 0, so heights that cannot return to zero are dropped past the
// second-longest length and that row is marked incomplete.
std::vector<CountRow> count_rows(const ModelSpec& m, int a, std::vector<int> lengths,
                                 bool tilde = false, bool last_zero_only = false);

class CountTable {
 public:
  using Key = std::tuple<int, int, bool>;  // (a, n, tilde)

  explicit CountTable(ModelSpec m);

  const ModelSpec& model() const { return model_; }
  const CountRow& row(int n, int a, bool tilde = false);
  BigInt count(int n, int h, int a, int b, bool tilde = false);
  // Computes several lengths from one sweep.
  void prefetch(int a, const std::vector<int>& lengths, bool tilde = false,
                bool last_zero_only = false);

  void insert(CountRow r);
  bool contains(int n, int a, bool tilde, bool need_complete = true) const;
  const std::map<Key, CountRow>& rows() const { return rows_; }
  int max_length() const;
  bool dirty() const { return dirty_; }
  void mark_clean() { dirty_ = false; }

 private:
  ModelSpec model_;
  std::map<Key, CountRow> rows_;
  bool dirty_ = false;
};

BigInt count(const ModelSpec& m, int n, int h, int a, int b, bool tilde = false);

// Second counting path: the first-step decomposition recursions, memoized.
class RecursionCounter {
 public:
  explicit RecursionCounter(ModelSpec m, bool tilde = false);
  BigInt count(int n, int h, int a, int b);

 private:
  BigInt n_zero(int n, int a, int b);
  BigInt flat_power(int n);

  ModelSpec model_;
  bool tilde_;
  BigInt wf_, wp_, wu_;
  std::map<std::tuple<int, int, int, int>, BigInt> memo_;
};

// Sum over midpoint states of w(h) N^{(h)}_{n,a->l} N^{(h)}_{n,c->l}
// compared with N_{2n,a->c}.
struct CompositionResult {
  bool holds = false;
  BigInt lhs;
  BigInt rhs;
};
CompositionResult composition_check(CountTable& table, int n, int a, int c);

}  // namespace smw
