#pragma once

#include "smw/model.hpp"
#include "smw/sis.hpp"

#include <functional>
#include <map>
#include <vector>

namespace smw {

int default_oracle_cap(const ModelSpec& m);

// Brute-force oracle: every valid walk of length n from index a, any end.
// The visitor receives the walk and its end label; end height is
// walk.final_height(). Tilde mode (S32Case2 only) replaces the colors of
// unmatched up steps with placeholders and visits each tilde walk once.
using WalkVisitor = std::function<void(const Walk&, const EndLabel&)>;
void for_each_walk(const ModelSpec& m, int n, int a, bool tilde, const WalkVisitor& visit,
                   int cap = 0);

std::vector<Walk> enumerate_walks(const ModelSpec& m, int n, int h, int a, int b,
                                  bool tilde = false, int cap = 0);

// (h, label) -> number of walks, from enumeration.
using OracleTable = std::map<std::pair<int, EndLabel>, BigInt>;
OracleTable enumerate_table(const ModelSpec& m, int n, int a, bool tilde = false, int cap = 0);

BigInt enumerate_count(const ModelSpec& m, int n, int h, int a, int b, bool tilde = false,
                       int cap = 0);

// Largest height reached by any valid connected prefix of length n.
int max_height(const ModelSpec& m, int n, int cap = 0);
// Height bound stated for each model.
int max_height_bound(const ModelSpec& m, int n);

}  // namespace smw
