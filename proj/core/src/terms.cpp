#include "smw/terms.hpp"

#include <deque>

namespace smw {

std::string to_string(TermKind k) {
  switch (k) {
    case TermKind::Color: return "C";
    case TermKind::Up: return "U";
    case TermKind::Down: return "D";
    case TermKind::Flat: return "F";
    case TermKind::Wedge: return "W";
    case TermKind::Valley: return "W2";
    case TermKind::Balance: return "B";
    case TermKind::Match: return "R";
    case TermKind::Left: return "left";
    case TermKind::Right: return "right";
    case TermKind::Disconnected: return "disc";
    default: return "pert";
  }
}

int GramVector::norm2() const {
  int s = 0;
  for (const auto& e : entries) s += e.coeff * e.coeff;
  return s;
}

namespace {

struct Builder {
  int k;
  std::vector<int> colors;  // {0} or {1, 2}
  std::deque<TermTemplate> out;  // stable references while groups are filled

  SisElement x(int a, int b, int c = 0) const { return SisElement{k, a, b, c}; }

  TermTemplate& group(TermKind kind, Anchor anchor, int width, Rational weight = 1) {
    out.push_back(TermTemplate{kind, anchor, width, std::move(weight), {}});
    return out.back();
  }
};

void add_s21(Builder& b) {
  auto& u = b.group(TermKind::Up, Anchor::Bulk, 2);
  u.vectors.push_back({{{{b.x(1, 2), b.x(2, 2)}, 1}, {{b.x(1, 1), b.x(1, 2)}, -1}}});
  auto& d = b.group(TermKind::Down, Anchor::Bulk, 2);
  d.vectors.push_back({{{{b.x(2, 1), b.x(1, 1)}, 1}, {{b.x(2, 2), b.x(2, 1)}, -1}}});
  auto& f = b.group(TermKind::Flat, Anchor::Bulk, 2);
  f.vectors.push_back({{{{b.x(1, 1), b.x(1, 1)}, 1}, {{b.x(1, 2), b.x(2, 1)}, -1}}});
  b.group(TermKind::Left, Anchor::LeftEdge, 1).vectors.push_back({{{{b.x(2, 1)}, 1}}});
  b.group(TermKind::Right, Anchor::RightEdge, 1).vectors.push_back({{{{b.x(1, 2)}, 1}}});
}

void add_three_letter(Builder& b, const ModelSpec& m) {
  const bool colored = m.colored();
  const bool balanced = m.family == Family::S32Case2;

  if (colored) {
    auto& c = b.group(TermKind::Color, Anchor::Bulk, 1, balanced ? m.mu : Rational(1));
    for (int a = 1; a <= 3; ++a)
      c.vectors.push_back({{{{b.x(a, a, 1)}, 1}, {{b.x(a, a, 2)}, -1}}});
  }

  auto& up = b.group(TermKind::Up, Anchor::Bulk, 2);
  auto& down = b.group(TermKind::Down, Anchor::Bulk, 2);
  for (int s : b.colors)
    for (int a = 1; a <= 3; ++a)
      for (int c = 1; c <= 3; ++c) {
        if (a == c) continue;
        GramVector v{{{{b.x(a, c, s), b.x(c, c, s)}, 1}, {{b.x(a, a, s), b.x(a, c, s)}, -1}}};
        (a < c ? up : down).vectors.push_back(std::move(v));
      }

  // F and the first line of W: all color pairs, or equal colors when balanced.
  std::vector<std::pair<int, int>> pairs;
  for (int s : b.colors)
    for (int t : b.colors)
      if (!balanced || s == t) pairs.push_back({s, t});
  auto& flat = b.group(TermKind::Flat, Anchor::Bulk, 2);
  auto& wedge = b.group(TermKind::Wedge, Anchor::Bulk, 2);
  for (auto [s, t] : pairs) {
    flat.vectors.push_back({{{{b.x(1, 1, s), b.x(1, 1, t)}, 2},
                             {{b.x(1, 2, s), b.x(2, 1, t)}, -1},
                             {{b.x(1, 3, s), b.x(3, 1, t)}, -1}}});
    flat.vectors.push_back({{{{b.x(2, 2, s), b.x(2, 2, t)}, 1}, {{b.x(2, 3, s), b.x(3, 2, t)}, -1}}});
    wedge.vectors.push_back({{{{b.x(1, 2, s), b.x(2, 1, t)}, 1}, {{b.x(1, 3, s), b.x(3, 1, t)}, -1}}});
  }

  Rational valley_weight = colored ? Rational(1) : m.lambda1;
  auto& valley = b.group(TermKind::Valley, Anchor::Bulk, 2, valley_weight);
  for (int s : b.colors)
    for (int t : b.colors)
      valley.vectors.push_back({{{{b.x(3, 1, s), b.x(1, 3, t)}, 1}, {{b.x(3, 2, s), b.x(2, 3, t)}, -1}}});

  if (!colored) {
    auto& bal = b.group(TermKind::Balance, Anchor::Bulk, 2, m.lambda2);
    bal.vectors.push_back({{{{b.x(1, 3), b.x(3, 2)}, 1}}});
    bal.vectors.push_back({{{{b.x(2, 3), b.x(3, 1)}, 1}}});
  }

  if (balanced) {
    auto& r = b.group(TermKind::Match, Anchor::Bulk, 2);
    for (int a = 1; a <= 3; ++a)
      for (int mid = 1; mid <= 3; ++mid)
        for (int c = 1; c <= 3; ++c) {
          if (mid <= a || mid <= c) continue;
          r.vectors.push_back({{{{b.x(a, mid, 1), b.x(mid, c, 2)}, 1}}});
          r.vectors.push_back({{{{b.x(a, mid, 2), b.x(mid, c, 1)}, 1}}});
        }
  }

  auto& left = b.group(TermKind::Left, Anchor::LeftEdge, 1);
  auto& right = b.group(TermKind::Right, Anchor::RightEdge, 1);
  for (int s : b.colors) {
    for (auto [p, q] : {std::pair{2, 1}, {3, 1}, {3, 2}}) left.vectors.push_back({{{{b.x(p, q, s)}, 1}}});
    for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 3}}) right.vectors.push_back({{{{b.x(p, q, s)}, 1}}});
  }
  if (m.boundary == Boundary::AddendumCorrected) {
    auto& left3 = b.group(TermKind::Left, Anchor::LeftEdge, 3);
    auto& right3 = b.group(TermKind::Right, Anchor::RightEdge, 3);
    for (int s : b.colors)
      for (int t : b.colors)
        for (int u : b.colors) {
          left3.vectors.push_back({{{{b.x(1, 3, s), b.x(3, 2, t), b.x(2, 1, u)}, 1}}});
          right3.vectors.push_back({{{{b.x(1, 2, s), b.x(2, 3, t), b.x(3, 1, u)}, 1}}});
        }
  }
}

}  // namespace

std::vector<TermTemplate> model_terms(const ModelSpec& m, const TermOptions& opts) {
  m.validate();
  Builder b{m.k(), m.colored() ? std::vector<int>{1, 2} : std::vector<int>{0}, {}};
  if (m.family == Family::S21)
    add_s21(b);
  else
    add_three_letter(b, m);

  if (opts.site0_penalty) {
    auto& p = b.group(TermKind::Perturbation, Anchor::LeftEdge, 1);
    for (int s : b.colors)
      for (int c = 1; c <= b.k; ++c) p.vectors.push_back({{{{b.x(1, c, s)}, 1}}});
  }

  if (opts.link_representation) {
    auto& disc = b.group(TermKind::Disconnected, Anchor::Bulk, 2);
    for (int s : b.colors)
      for (int t : b.colors)
        for (int p = 1; p <= b.k; ++p)
          for (int q = 1; q <= b.k; ++q)
            for (int r = 1; r <= b.k; ++r)
              for (int u = 1; u <= b.k; ++u)
                if (q != r) disc.vectors.push_back({{{{b.x(p, q, s), b.x(r, u, t)}, 1}}});
  }
  return {b.out.begin(), b.out.end()};
}

}  // namespace smw
