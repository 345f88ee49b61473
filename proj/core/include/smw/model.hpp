#pragma once

#include "smw/numeric.hpp"

#include <string>
#include <vector>

namespace smw {

enum class Family { S21, S31, S32Case1, S32Case2 };
enum class Regime { Zero, Positive };
enum class Boundary { Original, AddendumCorrected };
enum class Topology { Open, ClosedEndpoints, ClosedRing };

// Walk rule used for counting: free Motzkin-type constraint, or the
// strict x_{a,3} ... x_{3,a} pairing of the balanced regime.
enum class WalkRule { Free, Matched };

struct ModelSpec {
  Family family = Family::S31;
  Rational lambda1 = 1;
  Rational lambda2 = 0;
  Rational mu = 1;
  Boundary boundary = Boundary::AddendumCorrected;
  Topology topology = Topology::Open;

  // lambda = 0 maps to (lambda1 = 1, lambda2 = 0); lambda > 0 to (0, lambda).
  static ModelSpec s31(const Rational& lambda = 0);
  static ModelSpec s31_phase(const Rational& lambda1, const Rational& lambda2);
  static ModelSpec s21();
  static ModelSpec s32_case1();
  static ModelSpec s32_case2(const Rational& mu = 1);

  int k() const { return family == Family::S21 ? 2 : 3; }
  bool colored() const { return family == Family::S32Case1 || family == Family::S32Case2; }
  Regime lambda_regime() const;
  Regime mu_regime() const;
  WalkRule walk_rule() const;
  void validate() const;

  // Compact identifier, e.g. "s31-l0", "s32c2-mu1"; weights included.
  std::string tag() const;
  // Counting identifier: only the fields that change walk counts.
  std::string count_tag() const;
};

std::string to_string(Family f);
std::string to_string(Boundary b);
std::string to_string(Topology t);
Family parse_family(const std::string& s);
Boundary parse_boundary(const std::string& s);
Topology parse_topology(const std::string& s);
Rational parse_rational(const std::string& s);

// Index labels for the state at a cut or a walk end. For the matched rule,
// index 3 carries the index it was entered from (0 for a walk starting on 3).
struct EndLabel {
  int index = 1;
  int entry = 0;
  auto operator<=>(const EndLabel&) const = default;
};

std::vector<EndLabel> end_labels(const ModelSpec& m);

}  // namespace smw
