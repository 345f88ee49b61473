#pragma once

#include "smw/model.hpp"
#include "smw/sis.hpp"

#include <string>
#include <vector>

namespace smw {

enum class TermKind {
  Color,       // C: flat color flip
  Up,          // U
  Down,        // D
  Flat,        // F
  Wedge,       // first line of W
  Valley,      // second line of W
  Balance,     // B
  Match,       // R: unmatched colors at a peak
  Left,
  Right,
  Disconnected,
  Perturbation,
};

std::string to_string(TermKind k);

enum class Anchor { Bulk, LeftEdge, RightEdge };

// sum_i coeff_i |links_i>, unnormalized. The term adds weight * |v><v| / <v|v>.
struct GramEntry {
  std::vector<SisElement> links;
  int coeff = 1;
};

struct GramVector {
  std::vector<GramEntry> entries;
  int norm2() const;
};

// A group of mutually orthogonal vectors acting on `width` consecutive links.
struct TermTemplate {
  TermKind kind;
  Anchor anchor = Anchor::Bulk;
  int width = 2;
  Rational weight = 1;
  std::vector<GramVector> vectors;
};

struct TermOptions {
  bool link_representation = false;  // adds the disconnected-pair penalties
  bool site0_penalty = false;        // projector onto index 1 at site 0
};

std::vector<TermTemplate> model_terms(const ModelSpec& m, const TermOptions& opts = {});

}  // namespace smw
