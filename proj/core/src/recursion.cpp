#include "smw/counting.hpp"

namespace smw {

// First-step decomposition. A walk from a either starts flat, or starts
// with an up step x_{a,u} and then never returns to its starting height,
// or returns for the first time through a down step x_{u,d} after an
// excursion counted by N_{i,u->u}.
//   N^{(h)}_{n,a->b} = wf N^{(h)}_{n-1,a->b}
//     + sum_{u>a} [ wu N^{(h-1)}_{n-1,u->b}
//       + sum_i N_{i,u->u} sum_{d<u} wp N^{(h)}_{n-2-i,d->b} ]
// with d restricted to a when x_{a,3} has to come back as x_{3,a}.
RecursionCounter::RecursionCounter(ModelSpec m, bool tilde) : model_(std::move(m)), tilde_(tilde) {
  if (tilde_ && model_.family != Family::S32Case2)
    throw UsageError("tilde counting applies to the balanced colored model only");
  switch (model_.family) {
    case Family::S32Case1:
      wf_ = 2;
      wp_ = 4;
      wu_ = 2;
      break;
    case Family::S32Case2:
      wf_ = 2;
      wp_ = 2;
      wu_ = tilde_ ? 1 : 2;
      break;
    default:
      wf_ = 1;
      wp_ = 1;
      wu_ = 1;
  }
}

BigInt RecursionCounter::flat_power(int n) {
  return boost::multiprecision::pow(wf_, static_cast<unsigned>(n));
}

BigInt RecursionCounter::n_zero(int n, int a, int b) { return count(n, 0, a, b); }

BigInt RecursionCounter::count(int n, int h, int a, int b) {
  const int k = model_.k();
  if (a < 1 || a > k || b < 1 || b > k) throw UsageError("index out of range");
  if (n < 0 || h < 0 || h > n) return 0;
  if (n == 0) return h == 0 && a == b ? 1 : 0;
  if (a == k) return h == 0 && b == k ? flat_power(n) : BigInt(0);

  auto key = std::make_tuple(n, h, a, b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const bool matched = model_.walk_rule() == WalkRule::Matched;
  BigInt total = wf_ * count(n - 1, h, a, b);
  for (int u = a + 1; u <= k; ++u) {
    total += wu_ * count(n - 1, h - 1, u, b);
    for (int i = 0; i <= n - 2; ++i) {
      BigInt excursion = n_zero(i, u, u);
      if (excursion == 0) continue;
      BigInt rest = 0;
      for (int d = 1; d < u; ++d) {
        if (matched && u == 3 && d != a) continue;
        rest += count(n - 2 - i, h, d, b);
      }
      total += wp_ * excursion * rest;
    }
  }
  memo_.emplace(key, total);
  return total;
}

}  // namespace smw
