#include "smw/sis.hpp"

#include "smw/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace smw {

SisElement make_element(int k, int a, int b, int color) {
  if (k != 2 && k != 3)
    throw UsageError("alphabet bound must be 2 or 3");
  if (a < 1 || a > k || b < 1 || b > k)
    throw UsageError("element index out of range");
  if (color < 0 || color > kXi)
    throw UsageError("element color out of range");
  return SisElement{k, a, b, color};
}

StepKind classify_step(const SisElement& e) {
  if (e.domain < e.range) return StepKind::Up;
  if (e.domain > e.range) return StepKind::Down;
  return StepKind::Flat;
}

int height_delta(const SisElement& e) {
  switch (classify_step(e)) {
    case StepKind::Up: return 1;
    case StepKind::Down: return -1;
    default: return 0;
  }
}

std::optional<SisElement> compose(const SisElement& e1, const SisElement& e2) {
  if (e1.k != e2.k || e1.colored() != e2.colored())
    throw UsageError("cannot compose elements of different alphabets");
  if (e1.color == kXi || e2.color == kXi)
    throw UsageError("placeholder steps do not compose");
  if (e1.range != e2.domain) return std::nullopt;
  int color = 0;
  if (e1.colored()) color = ((e1.color - 1) ^ (e2.color - 1)) + 1;
  return SisElement{e1.k, e1.domain, e2.range, color};
}

namespace {

bool valid_ab(int ab) { return ab == 12 || ab == 23 || ab == 31; }

bool valid_cd(int cd) {
  int c = cd / 10, d = cd % 10;
  return c != d && c >= 1 && c <= 3 && d >= 1 && d <= 3 && cd < 100;
}

}  // namespace

std::vector<PairElement> all_pair_elements() {
  std::vector<PairElement> out;
  for (int ab : {12, 23, 31})
    for (int cd : {12, 23, 31, 21, 32, 13}) out.push_back({ab, cd});
  return out;
}

SisElement ez_realization(const PairElement& p) {
  if (!valid_ab(p.ab) || !valid_cd(p.cd))
    throw UsageError("invalid pair-notation indices");
  int a = p.ab == 12 ? 1 : p.ab == 23 ? 2 : 3;
  int b = 0, color = 0;
  switch (p.cd) {
    case 12: b = 1; color = 1; break;
    case 23: b = 2; color = 1; break;
    case 31: b = 3; color = 1; break;
    case 21: b = 1; color = 2; break;
    case 32: b = 2; color = 2; break;
    case 13: b = 3; color = 2; break;
  }
  return SisElement{3, a, b, color};
}

std::optional<PairElement> compose_pairs(const PairElement& p, const PairElement& q) {
  if (!valid_ab(p.ab) || !valid_cd(p.cd) || !valid_ab(q.ab) || !valid_cd(q.cd))
    throw UsageError("invalid pair-notation indices");
  int c = p.cd / 10, d = p.cd % 10;
  int e = q.ab / 10, f = q.ab % 10;
  int g = q.cd / 10, h = q.cd % 10;
  if (c == e && d == f) return PairElement{p.ab, 10 * g + h};
  if (c == f && d == e) return PairElement{p.ab, 10 * h + g};
  return std::nullopt;
}

std::vector<int> Walk::height_profile() const {
  std::vector<int> y(steps.size() + 1, 0);
  for (std::size_t j = 0; j < steps.size(); ++j) y[j + 1] = y[j] + height_delta(steps[j]);
  return y;
}

int Walk::final_height() const {
  int y = 0;
  for (const auto& s : steps) y += height_delta(s);
  return y;
}

bool Walk::motzkin_valid(int h) const {
  auto y = height_profile();
  return std::all_of(y.begin(), y.end(), [](int v) { return v >= 0; }) && y.back() == h;
}

Connectivity connectivity(const Walk& w) {
  if (w.steps.empty()) throw UsageError("connectivity of an empty walk");
  Connectivity c;
  for (std::size_t j = 0; j + 1 < w.steps.size(); ++j)
    if (w.steps[j].range != w.steps[j + 1].domain) c.breaks.push_back(static_cast<int>(j) + 1);
  if (c.breaks.empty())
    c.kind = ConnectivityKind::Connected;
  else if (c.breaks.size() + 1 == w.steps.size())
    c.kind = ConnectivityKind::Disconnected;
  else
    c.kind = ConnectivityKind::PartiallyConnected;
  return c;
}

std::string to_string(const SisElement& e) {
  std::ostringstream os;
  if (e.color == kXi)
    os << "xi";
  else if (e.color)
    os << "x^" << e.color;
  else
    os << "x";
  os << '[' << e.domain << ',' << e.range << ']';
  return os.str();
}

std::string to_string(const Walk& w) {
  std::string s;
  for (std::size_t j = 0; j < w.steps.size(); ++j) {
    if (j) s += ',';
    s += to_string(w.steps[j]);
  }
  return s;
}

std::string to_string(StepKind s) {
  switch (s) {
    case StepKind::Up: return "Up";
    case StepKind::Down: return "Down";
    default: return "Flat";
  }
}

std::string to_string(ConnectivityKind c) {
  switch (c) {
    case ConnectivityKind::Connected: return "Connected";
    case ConnectivityKind::PartiallyConnected: return "PartiallyConnected";
    default: return "Disconnected";
  }
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw UsageError("malformed element syntax: " + std::string(s));
  }
  int digit() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw UsageError("malformed element syntax: " + std::string(s));
    return s[i++] - '0';
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
};

SisElement parse_one(Cursor& c, int k) {
  c.expect('x');
  int color = 0;
  if (c.eat('i'))
    color = kXi;
  else if (c.eat('^'))
    color = c.digit();
  c.expect('[');
  int a = c.digit();
  c.expect(',');
  int b = c.digit();
  c.expect(']');
  if (color == 0 || color == kXi || color == 1 || color == 2) return make_element(k, a, b, color);
  throw UsageError("color must be 1 or 2");
}

}  // namespace

SisElement parse_element(std::string_view text, int k) {
  Cursor c{text};
  auto e = parse_one(c, k);
  if (!c.done()) throw UsageError("trailing characters in element: " + std::string(text));
  return e;
}

Walk parse_walk(std::string_view text, int k) {
  Cursor c{text};
  Walk w;
  if (c.done()) return w;
  w.steps.push_back(parse_one(c, k));
  while (c.eat(',')) w.steps.push_back(parse_one(c, k));
  if (!c.done()) throw UsageError("trailing characters in walk: " + std::string(text));
  return w;
}

}  // namespace smw
