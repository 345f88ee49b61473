#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smw {

// Color 0 is an uncolored element, 1 and 2 are the E and Z colors.
// kXi marks a tilde placeholder whose color has been erased.
inline constexpr int kXi = 3;

struct SisElement {
  int k = 3;
  int domain = 1;
  int range = 1;
  int color = 0;

  auto operator<=>(const SisElement&) const = default;
  bool colored() const { return color != 0; }
};

SisElement make_element(int k, int a, int b, int color = 0);

enum class StepKind { Up, Down, Flat };

StepKind classify_step(const SisElement& e);
int height_delta(const SisElement& e);

// Absent result is the semigroup zero.
std::optional<SisElement> compose(const SisElement& e1, const SisElement& e2);

// Pair-notation element x_{ab,cd} of the two-point semigroup on three letters.
struct PairElement {
  int ab = 12;
  int cd = 12;
  auto operator<=>(const PairElement&) const = default;
};

std::vector<PairElement> all_pair_elements();
SisElement ez_realization(const PairElement& p);
// Native pair-notation product, sum of at most one nonzero term.
std::optional<PairElement> compose_pairs(const PairElement& p, const PairElement& q);

struct Walk {
  std::vector<SisElement> steps;

  auto operator<=>(const Walk&) const = default;
  std::size_t size() const { return steps.size(); }
  std::vector<int> height_profile() const;
  int final_height() const;
  bool motzkin_valid(int h) const;
};

enum class ConnectivityKind { Connected, PartiallyConnected, Disconnected };

struct Connectivity {
  ConnectivityKind kind = ConnectivityKind::Connected;
  std::vector<int> breaks;  // 1-based step positions j with range(j) != domain(j+1)
};

Connectivity connectivity(const Walk& w);

std::string to_string(const SisElement& e);
std::string to_string(const Walk& w);
std::string to_string(StepKind s);
std::string to_string(ConnectivityKind c);
SisElement parse_element(std::string_view text, int k);
Walk parse_walk(std::string_view text, int k);

}  // namespace smw
