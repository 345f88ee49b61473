#include "smw/counting.hpp"

#include <algorithm>

namespace smw {

BigInt CountRow::at(int h, int b) const {
  BigInt total = 0;
  if (h < 0 || h > max_h()) return total;
  for (std::size_t l = 0; l < labels.size(); ++l)
    if (labels[l].index == b) total += by_height[h][l];
  return total;
}

BigInt CountRow::at_label(int h, const EndLabel& lab) const {
  if (h < 0 || h > max_h()) return 0;
  for (std::size_t l = 0; l < labels.size(); ++l)
    if (labels[l] == lab) return by_height[h][l];
  return 0;
}

namespace {

struct Transition {
  int from;
  int to;
  int dy;
  unsigned weight;
};

std::vector<Transition> transitions(const ModelSpec& m, const std::vector<EndLabel>& labels,
                                    bool tilde) {
  bool matched = m.walk_rule() == WalkRule::Matched;
  auto pos = [&](EndLabel l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    return static_cast<int>(it - labels.begin());
  };
  std::vector<Transition> out;
  for (std::size_t f = 0; f < labels.size(); ++f) {
    const auto& from = labels[f];
    for (int b = 1; b <= m.k(); ++b) {
      int dy = b > from.index ? 1 : b < from.index ? -1 : 0;
      EndLabel to{b, 0};
      if (matched) {
        if (from.index == 3 && b < 3 && from.entry != 0 && b != from.entry) continue;
        if (b == 3) to.entry = from.index == 3 ? from.entry : from.index;
      }
      unsigned w = 1;
      switch (m.family) {
        case Family::S32Case1:
          w = 2;
          break;
        case Family::S32Case2:
          if (dy == 0)
            w = 2;
          else if (dy > 0)
            w = tilde ? 1 : 2;
          else
            w = tilde ? 2 : 1;
          break;
        default:
          break;
      }
      out.push_back({static_cast<int>(f), pos(to), dy, w});
    }
  }
  return out;
}

}  // namespace

std::vector<CountRow> count_rows(const ModelSpec& m, int a, std::vector<int> lengths, bool tilde,
                                 bool last_zero_only) {
  if (a < 1 || a > m.k()) throw UsageError("index out of range");
  if (tilde && m.family != Family::S32Case2)
    throw UsageError("tilde counting applies to the balanced colored model only");
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  if (lengths.empty()) return {};
  if (lengths.front() < 0) throw UsageError("walk length must be nonnegative");

  auto labels = end_labels(m);
  auto trans = transitions(m, labels, tilde);
  const int L = static_cast<int>(labels.size());
  const int last = lengths.back();
  const int second_last = lengths.size() > 1 ? lengths[lengths.size() - 2] : 0;

  std::vector<std::vector<BigInt>> cur(1, std::vector<BigInt>(L, 0));
  cur[0][a - 1] = 1;  // labels start with indices 1..k in order

  std::vector<CountRow> out;
  std::size_t next = 0;
  auto snapshot = [&](int j) {
    while (next < lengths.size() && lengths[next] == j) {
      CountRow r;
      r.n = j;
      r.a = a;
      r.tilde = tilde;
      r.labels = labels;
      r.by_height = cur;
      r.complete = !(last_zero_only && j > second_last && j > 0);
      if (!r.complete) r.by_height.resize(1);
      while (r.by_height.size() > 1) {
        const auto& top = r.by_height.back();
        if (std::any_of(top.begin(), top.end(), [](const BigInt& v) { return v != 0; })) break;
        r.by_height.pop_back();
      }
      out.push_back(std::move(r));
      ++next;
    }
  };
  snapshot(0);
  for (int j = 1; j <= last; ++j) {
    int hmax = static_cast<int>(cur.size());  // heights 0..hmax after the step
    if (last_zero_only && j > second_last) hmax = std::min(hmax, last - j);
    hmax = std::max(hmax, 0);
    std::vector<std::vector<BigInt>> nxt(hmax + 1, std::vector<BigInt>(L, 0));
    for (int h = 0; h < static_cast<int>(cur.size()); ++h) {
      for (const auto& t : trans) {
        const BigInt& v = cur[h][t.from];
        if (v == 0) continue;
        int nh = h + t.dy;
        if (nh < 0 || nh > hmax) continue;
        if (t.weight == 1)
          nxt[nh][t.to] += v;
        else
          nxt[nh][t.to] += v * t.weight;
      }
    }
    while (nxt.size() > 1) {
      const auto& top = nxt.back();
      if (std::any_of(top.begin(), top.end(), [](const BigInt& v) { return v != 0; })) break;
      nxt.pop_back();
    }
    cur = std::move(nxt);
    snapshot(j);
  }
  return out;
}

CountTable::CountTable(ModelSpec m) : model_(std::move(m)) { model_.validate(); }

bool CountTable::contains(int n, int a, bool tilde, bool need_complete) const {
  auto it = rows_.find({a, n, tilde});
  return it != rows_.end() && (it->second.complete || !need_complete);
}

const CountRow& CountTable::row(int n, int a, bool tilde) {
  auto it = rows_.find({a, n, tilde});
  if (it != rows_.end() && it->second.complete) return it->second;
  prefetch(a, {n}, tilde);
  return rows_.at({a, n, tilde});
}

BigInt CountTable::count(int n, int h, int a, int b, bool tilde) {
  if (b < 1 || b > model_.k()) throw UsageError("index out of range");
  if (h < 0) throw UsageError("height must be nonnegative");
  if (h == 0) {
    auto it = rows_.find({a, n, tilde});
    if (it != rows_.end()) return it->second.at(0, b);
  }
  return row(n, a, tilde).at(h, b);
}

void CountTable::prefetch(int a, const std::vector<int>& lengths, bool tilde, bool last_zero_only) {
  std::vector<int> missing;
  const int last = lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
  for (int n : lengths)
    if (!contains(n, a, tilde, !(last_zero_only && n == last))) missing.push_back(n);
  if (missing.empty()) return;
  bool zero_only = last_zero_only && *std::max_element(missing.begin(), missing.end()) == last;
  for (auto& r : count_rows(model_, a, missing, tilde, zero_only)) insert(std::move(r));
}

void CountTable::insert(CountRow r) {
  Key key{r.a, r.n, r.tilde};
  if (!r.complete && contains(r.n, r.a, r.tilde)) return;
  rows_[key] = std::move(r);
  dirty_ = true;
}

int CountTable::max_length() const {
  int best = 0;
  for (const auto& [key, r] : rows_) best = std::max(best, r.n);
  return best;
}

BigInt count(const ModelSpec& m, int n, int h, int a, int b, bool tilde) {
  CountTable t(m);
  return t.count(n, h, a, b, tilde);
}

CompositionResult composition_check(CountTable& table, int n, int a, int c) {
  const auto& m = table.model();
  bool tilde = m.family == Family::S32Case2;
  const auto& left = table.row(n, a, tilde);
  const auto& right = table.row(n, c, tilde);
  CompositionResult res;
  res.lhs = 0;
  int hmax = std::min(left.max_h(), right.max_h());
  for (int h = 0; h <= hmax; ++h) {
    BigInt layer = 0;
    for (const auto& lab : left.labels) {
      // a walk read backwards enters index 3 from where the forward walk leaves it
      layer += left.at_label(h, lab) * right.at_label(h, lab);
    }
    if (tilde) layer <<= h;
    res.lhs += layer;
  }
  res.rhs = table.count(2 * n, 0, a, c, false);
  res.holds = res.lhs == res.rhs;
  return res;
}

}  // namespace smw
