#include "smw/walks.hpp"

#include <algorithm>

namespace smw {

int default_oracle_cap(const ModelSpec& m) { return m.colored() ? 9 : 12; }

namespace {

void check_cap(const ModelSpec& m, int n, int cap) {
  int limit = cap > 0 ? cap : default_oracle_cap(m);
  if (n > limit)
    throw ResourceError("walk length " + std::to_string(n) + " exceeds oracle cap " +
                        std::to_string(limit));
  if (n < 0) throw UsageError("walk length must be nonnegative");
}

void check_index(const ModelSpec& m, int a) {
  if (a < 1 || a > m.k()) throw UsageError("index out of range");
}

struct Enumerator {
  const ModelSpec& m;
  int n;
  bool tilde;
  const WalkVisitor& visit;
  int k;
  bool matched;
  int ncolors;
  Walk walk;
  std::vector<int> open_ups;  // positions of unmatched up steps so far

  void run(int a) {
    walk.steps.clear();
    open_ups.clear();
    step(a, 0, 0);
  }

  void emit(int index, int entry) {
    EndLabel label{index, matched && index == 3 ? entry : 0};
    if (!tilde) {
      visit(walk, label);
      return;
    }
    // canonical representative: unmatched ups carry color 1, then erased
    for (int p : open_ups)
      if (walk.steps[p].color != 1) return;
    Walk t = walk;
    for (int p : open_ups) t.steps[p].color = kXi;
    visit(t, label);
  }

  // entry: index from which the current index 3 was entered (matched rule).
  void step(int index, int entry, int height) {
    if (static_cast<int>(walk.steps.size()) == n) {
      emit(index, entry);
      return;
    }
    for (int b = 1; b <= k; ++b) {
      int dy = b > index ? 1 : b < index ? -1 : 0;
      if (height + dy < 0) continue;
      if (matched && index == 3 && b < 3 && entry != 0 && b != entry) continue;
      int next_entry = b == 3 ? (index == 3 ? entry : index) : 0;
      for (int c = ncolors ? 1 : 0; c <= ncolors; ++c) {
        int popped = -1;
        if (dy < 0) {
          popped = open_ups.back();
          if (m.family == Family::S32Case2 && walk.steps[popped].color != c) continue;
          open_ups.pop_back();
        }
        walk.steps.push_back(SisElement{k, index, b, c});
        if (dy > 0) open_ups.push_back(static_cast<int>(walk.steps.size()) - 1);
        step(b, next_entry, height + dy);
        if (dy > 0) open_ups.pop_back();
        walk.steps.pop_back();
        if (popped >= 0) open_ups.push_back(popped);
      }
    }
  }
};

}  // namespace

void for_each_walk(const ModelSpec& m, int n, int a, bool tilde, const WalkVisitor& visit,
                   int cap) {
  check_cap(m, n, cap);
  check_index(m, a);
  if (tilde && m.family != Family::S32Case2)
    throw UsageError("tilde counting applies to the balanced colored model only");
  Enumerator e{m, n, tilde, visit, m.k(), m.walk_rule() == WalkRule::Matched,
               m.colored() ? 2 : 0, {}, {}};
  e.run(a);
}

std::vector<Walk> enumerate_walks(const ModelSpec& m, int n, int h, int a, int b, bool tilde,
                                  int cap) {
  check_index(m, b);
  std::vector<Walk> out;
  for_each_walk(
      m, n, a, tilde,
      [&](const Walk& w, const EndLabel& l) {
        if (l.index == b && w.final_height() == h) out.push_back(w);
      },
      cap);
  std::sort(out.begin(), out.end());
  return out;
}

OracleTable enumerate_table(const ModelSpec& m, int n, int a, bool tilde, int cap) {
  OracleTable t;
  for_each_walk(
      m, n, a, tilde, [&](const Walk& w, const EndLabel& l) { t[{w.final_height(), l}] += 1; },
      cap);
  return t;
}

BigInt enumerate_count(const ModelSpec& m, int n, int h, int a, int b, bool tilde, int cap) {
  check_index(m, b);
  BigInt total = 0;
  for (const auto& [key, v] : enumerate_table(m, n, a, tilde, cap))
    if (key.first == h && key.second.index == b) total += v;
  return total;
}

int max_height(const ModelSpec& m, int n, int cap) {
  if (n < 1) throw UsageError("max_height needs n >= 1");
  ModelSpec plain = m;
  if (m.colored()) plain = ModelSpec::s31(0);
  check_cap(plain, n, cap);
  int best = 0;
  for (int a = 1; a <= plain.k(); ++a)
    for_each_walk(
        plain, n, a, false,
        [&](const Walk& w, const EndLabel&) {
          auto y = w.height_profile();
          best = std::max(best, *std::max_element(y.begin(), y.end()));
        },
        cap);
  return best;
}

int max_height_bound(const ModelSpec& m, int n) {
  if (m.family == Family::S21) return std::min(n, 1);
  if (m.walk_rule() == WalkRule::Matched) return std::min(n, 2);
  return n < 2 ? n : (n - 2) / 3 + 2;
}

}  // namespace smw
