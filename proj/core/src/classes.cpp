#include "smw/classes.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>
#include <unordered_set>

namespace smw {

namespace {

constexpr std::int32_t kUnset = -1;

// BFS labelling of the move graph; returns the number of classes.
std::size_t label_classes(const Hamiltonian& h, std::vector<std::int32_t>& id) {
  const auto& basis = h.basis();
  const std::size_t dim = basis.size();
  if (dim > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
    throw ResourceError("basis too large for class labelling");
  id.assign(dim, kUnset);
  std::int32_t next = 0;
  std::vector<std::size_t> queue;
  for (std::size_t s0 = 0; s0 < dim; ++s0) {
    if (id[s0] != kUnset) continue;
    id[s0] = next;
    queue.assign(1, s0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Code c = basis.code(queue[qi]);
      for (const auto& p : h.placements()) {
        std::uint32_t win = p.window(c);
        for (auto [vi, ei] : p.lookup[win]) {
          const auto& v = p.vectors[vi];
          if (v.entries.size() < 2) continue;
          for (std::uint32_t e = 0; e < v.entries.size(); ++e) {
            if (e == ei) continue;
            auto t = basis.index(p.replace(c, win, v.entries[e].local));
            if (!t) throw std::logic_error("move leaves the basis sector");
            if (id[*t] == kUnset) {
              id[*t] = next;
              queue.push_back(*t);
            }
          }
        }
      }
    }
    ++next;
  }
  return static_cast<std::size_t>(next);
}

bool touches_penalty(const Hamiltonian& h, Code c) {
  for (const auto& p : h.placements())
    for (auto [vi, ei] : p.lookup[p.window(c)])
      if (p.vectors[vi].entries.size() == 1) return true;
  return false;
}

// <v|psi> = 0 for every placed vector, psi the indicator of `in`.
template <class Member>
bool annihilated(const Hamiltonian& h, const std::vector<std::size_t>& members, Member in) {
  const auto& basis = h.basis();
  for (std::size_t s : members) {
    Code c = basis.code(s);
    for (const auto& p : h.placements()) {
      std::uint32_t win = p.window(c);
      for (auto [vi, ei] : p.lookup[win]) {
        const auto& v = p.vectors[vi];
        // evaluate each (vector, context) once, from its first member entry
        bool first = true;
        long long sum = 0;
        for (std::uint32_t e = 0; e < v.entries.size(); ++e) {
          auto t = basis.index(p.replace(c, win, v.entries[e].local));
          if (!t || !in(*t)) continue;
          if (e < ei) {
            first = false;
            break;
          }
          sum += v.entries[e].coeff;
        }
        if (first && sum != 0) return false;
      }
    }
  }
  return true;
}

GroundClass make_class(const Hamiltonian& h, std::vector<std::size_t> members) {
  GroundClass g;
  std::sort(members.begin(), members.end());
  g.members = std::move(members);
  Code seed = h.basis().code(g.members.front());
  g.seed = h.basis().label(seed);
  std::tie(g.start, g.end) = h.basis().endpoints(seed);
  return g;
}

}  // namespace

ClassReport ground_classes(const Hamiltonian& h) {
  const auto& basis = h.basis();
  std::vector<std::int32_t> id;
  ClassReport out;
  out.basis_size = basis.size();
  out.total_classes = label_classes(h, id);

  std::vector<char> penalized(out.total_classes, 0);
  for (std::size_t s = 0; s < basis.size(); ++s)
    if (!penalized[id[s]] && touches_penalty(h, basis.code(s))) penalized[id[s]] = 1;

  std::vector<std::vector<std::size_t>> members(out.total_classes);
  for (std::size_t s = 0; s < basis.size(); ++s)
    if (!penalized[id[s]]) members[id[s]].push_back(s);

  for (std::size_t k = 0; k < out.total_classes; ++k) {
    if (penalized[k]) continue;
    auto g = make_class(h, std::move(members[k]));
    const auto cls = static_cast<std::int32_t>(k);
    g.annihilated = annihilated(h, g.members, [&](std::size_t t) { return id[t] == cls; });
    (g.annihilated ? out.surviving : out.rejected_unpenalized).push_back(std::move(g));
  }
  auto order = [](const GroundClass& a, const GroundClass& b) {
    return std::tie(a.start, a.end, a.members.front()) < std::tie(b.start, b.end, b.members.front());
  };
  std::sort(out.surviving.begin(), out.surviving.end(), order);
  return out;
}

std::size_t count_classes(const Hamiltonian& h) {
  std::vector<std::int32_t> id;
  return label_classes(h, id);
}

std::optional<GroundClass> class_of(const Hamiltonian& h, const Walk& w) {
  const auto& basis = h.basis();
  auto code = basis.encode(w);
  if (!code) return std::nullopt;
  // closure from the seed only
  std::unordered_set<std::size_t> seen{*basis.index(*code)};
  std::vector<std::size_t> queue(seen.begin(), seen.end());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Code c = basis.code(queue[qi]);
    for (const auto& p : h.placements()) {
      std::uint32_t win = p.window(c);
      for (auto [vi, ei] : p.lookup[win]) {
        const auto& v = p.vectors[vi];
        if (v.entries.size() < 2) continue;
        for (std::uint32_t e = 0; e < v.entries.size(); ++e) {
          auto t = basis.index(p.replace(c, win, v.entries[e].local));
          if (!t) throw std::logic_error("move leaves the basis sector");
          if (seen.insert(*t).second) queue.push_back(*t);
        }
      }
    }
  }
  auto g = make_class(h, std::move(queue));
  for (std::size_t s : g.members)
    if (touches_penalty(h, basis.code(s))) g.penalized = true;
  g.annihilated = annihilated(h, g.members, [&](std::size_t t) { return seen.count(t) != 0; });
  return g;
}

bool verify_zero_energy(const SparseOperator<Rational>& h, const GroundClass& c) {
  std::vector<Rational> psi(h.dim, Rational(0));
  for (std::size_t s : c.members) psi[s] = 1;
  for (const auto& y : h.apply(psi))
    if (y != 0) return false;
  return true;
}

bool verify_zero_energy(const Hamiltonian& h, const GroundClass& c) {
  std::vector<char> in(h.basis().size(), 0);
  for (std::size_t s : c.members) in[s] = 1;
  for (std::size_t s : c.members)
    if (touches_penalty(h, h.basis().code(s))) return false;
  return annihilated(h, c.members, [&](std::size_t t) { return in[t] != 0; });
}

const std::vector<std::string>& addendum_exhibits() {
  static const std::vector<std::string> exhibits{
      "x[1,3],x[3,2],x[2,1],x[1,2],x[2,3],x[3,1]",
      "x[1,3],x[3,2],x[2,1],x[1,3],x[3,2],x[2,1]",
      "x[2,3],x[3,1],x[1,2],x[2,3],x[3,1]",
  };
  return exhibits;
}

namespace {

bool has_smw_member(const Hamiltonian& h, const GroundClass& g) {
  for (std::size_t s : g.members) {
    auto w = h.basis().walk(h.basis().code(s));
    auto prof = w.height_profile();
    if (connectivity(w).kind == ConnectivityKind::Connected && prof.back() == 0 &&
        std::all_of(prof.begin(), prof.end(), [](int y) { return y >= 0; }))
      return true;
  }
  return false;
}

}  // namespace

AddendumReport addendum_regression(int n) {
  if (n < 5) throw UsageError("addendum regression needs n >= 5");
  AddendumReport out;
  out.n = n;
  auto original = ModelSpec::s31(0);
  original.boundary = Boundary::Original;
  auto corrected = ModelSpec::s31(0);
  Hamiltonian ho(original, n), hc(corrected, n);
  auto ro = ground_classes(ho);
  auto rc = ground_classes(hc);
  out.gsd_original = ro.surviving.size();
  out.gsd_corrected = rc.surviving.size();
  for (const auto& text : addendum_exhibits()) {
    auto w = parse_walk(text, 3);
    if (static_cast<int>(w.size()) != n) continue;
    AddendumExhibit ex;
    ex.walk = text;
    auto co = class_of(ho, w);
    auto cc = class_of(hc, w);
    ex.zero_energy_original = co && co->survives();
    ex.zero_energy_corrected = cc && cc->survives();
    out.exhibits.push_back(ex);
  }
  for (const auto& g : rc.surviving)
    if (!has_smw_member(hc, g)) out.residual_non_smw.push_back(g.seed);
  return out;
}

std::vector<PhasePoint> phase_scan(const std::vector<std::pair<std::string, ModelSpec>>& grid, int n,
                                   HamiltonianOptions opts) {
  std::vector<PhasePoint> out;
  for (const auto& [label, m] : grid) {
    Hamiltonian h(m, n, opts);
    auto r = ground_classes(h);
    out.push_back({label, m, n, r.surviving.size(), r.total_classes});
  }
  return out;
}

std::vector<GrowthRow> degeneracy_growth(const ModelSpec& m, int n_min, int n_max, HamiltonianOptions opts) {
  std::vector<GrowthRow> out;
  for (int n = n_min; n <= n_max; ++n) {
    Hamiltonian h(m, n, opts);
    GrowthRow row{n, ground_classes(h).surviving.size(), 0};
    if (!out.empty() && out.back().gsd) row.ratio = static_cast<double>(row.gsd) / out.back().gsd;
    out.push_back(row);
  }
  return out;
}

}  // namespace smw
