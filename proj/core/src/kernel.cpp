#include "smw/kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>

namespace smw {

namespace {

// Union-find with a sign per node: value(x) = sign(x) * value(root(x)).
class SignedClasses {
 public:
  explicit SignedClasses(std::size_t n) : parent_(n), sign_(n, 1), zero_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::pair<std::uint32_t, int> find(std::uint32_t x) {
    int s = 1;
    std::uint32_t r = x;
    while (parent_[r] != r) {
      s *= sign_[r];
      r = parent_[r];
    }
    // path compression
    int acc = s;
    while (parent_[x] != r) {
      std::uint32_t next = parent_[x];
      int sx = sign_[x];
      parent_[x] = r;
      sign_[x] = static_cast<std::int8_t>(acc);
      acc *= sx;
      x = next;
    }
    return {r, s};
  }

  bool zero(std::uint32_t root) const { return zero_[root]; }

  // returns true if anything changed
  bool set_zero(std::uint32_t x) {
    auto [r, s] = find(x);
    if (zero_[r]) return false;
    zero_[r] = 1;
    return true;
  }

  // value(a) = rel * value(b)
  bool unite(std::uint32_t a, std::uint32_t b, int rel) {
    auto [ra, sa] = find(a);
    auto [rb, sb] = find(b);
    if (ra == rb) {
      if (sa != rel * sb && !zero_[ra]) {
        zero_[ra] = 1;
        return true;
      }
      return false;
    }
    parent_[ra] = rb;
    sign_[ra] = static_cast<std::int8_t>(sa * rel * sb);
    if (zero_[ra]) zero_[rb] = 1;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::int8_t> sign_;
  std::vector<std::uint8_t> zero_;
};

struct Term {
  std::uint32_t var;
  long long coeff;
};

// Substitute class roots, merge equal variables, drop zero classes.
std::vector<Term> reduce(SignedClasses& uf, const Term* begin, const Term* end) {
  std::vector<Term> out;
  for (auto* t = begin; t != end; ++t) {
    auto [r, s] = uf.find(t->var);
    if (uf.zero(r)) continue;
    out.push_back({r, s * t->coeff});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const auto& t : out) {
    if (!merged.empty() && merged.back().var == t.var)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coeff == 0; }),
               merged.end());
  return merged;
}

// Applies a row; returns 0 when consumed (trivial, zero or union), 1 when it must stay.
int absorb(SignedClasses& uf, const std::vector<Term>& row, bool& changed) {
  if (row.empty()) return 0;
  if (row.size() == 1) {
    changed |= uf.set_zero(row[0].var);
    return 0;
  }
  if (row.size() == 2 && std::llabs(row[0].coeff) == std::llabs(row[1].coeff)) {
    int rel = row[0].coeff == -row[1].coeff ? 1 : -1;
    changed |= uf.unite(row[0].var, row[1].var, rel);
    return 0;
  }
  return 1;
}

}  // namespace

KernelResult exact_kernel(const Hamiltonian& h, bool keep_classes) {
  const auto& basis = h.basis();
  const std::size_t dim = basis.size();
  if (dim > std::numeric_limits<std::uint32_t>::max()) throw ResourceError("basis too large for kernel");
  SignedClasses uf(dim);

  std::vector<Term> residual;
  std::vector<std::size_t> offsets{0};
  std::vector<Term> raw;
  bool changed = false;
  for (std::size_t s = 0; s < dim; ++s) {
    Code c = basis.code(s);
    for (const auto& p : h.placements()) {
      if (p.weight <= 0) continue;
      std::uint32_t win = p.window(c);
      for (auto [vi, ei] : p.lookup[win]) {
        if (ei != 0) continue;
        const auto& v = p.vectors[vi];
        raw.clear();
        for (const auto& e : v.entries) {
          auto t = basis.index(p.replace(c, win, e.local));
          if (!t) throw std::logic_error("term leaves the basis sector");
          raw.push_back({static_cast<std::uint32_t>(*t), e.coeff});
        }
        if (raw.size() <= 2) {
          auto row = reduce(uf, raw.data(), raw.data() + raw.size());
          if (absorb(uf, row, changed) == 0) continue;
        }
        residual.insert(residual.end(), raw.begin(), raw.end());
        offsets.push_back(residual.size());
      }
    }
  }

  // fixpoint over the stored rows
  std::vector<char> alive(offsets.size() - 1, 1);
  do {
    changed = false;
    for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
      if (!alive[r]) continue;
      auto row = reduce(uf, residual.data() + offsets[r], residual.data() + offsets[r + 1]);
      if (absorb(uf, row, changed) == 0) alive[r] = 0;
    }
  } while (changed);

  KernelResult out;
  out.basis_size = dim;
  std::map<std::uint32_t, std::int32_t> class_id;
  if (keep_classes) out.class_of.assign(dim, -1);
  for (std::size_t s = 0; s < dim; ++s) {
    auto [r, sign] = uf.find(static_cast<std::uint32_t>(s));
    if (uf.zero(r)) continue;
    ++out.live_configs;
    auto [it, fresh] = class_id.emplace(r, static_cast<std::int32_t>(class_id.size()));
    if (keep_classes) out.class_of[s] = it->second;
  }
  out.live_classes = class_id.size();

  // exact elimination of what is left, pivots keyed by class root
  std::map<std::uint32_t, std::map<std::uint32_t, Rational>> pivots;
  for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
    if (!alive[r]) continue;
    ++out.residual_rows;
    auto terms = reduce(uf, residual.data() + offsets[r], residual.data() + offsets[r + 1]);
    std::map<std::uint32_t, Rational> row;
    for (const auto& t : terms) row[t.var] = Rational(t.coeff);
    while (!row.empty()) {
      auto lead = row.begin();
      auto pv = pivots.find(lead->first);
      if (pv == pivots.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [var, q] : row) q *= inv;
        pivots.emplace(lead->first, std::move(row));
        break;
      }
      Rational f = lead->second;
      for (const auto& [var, q] : pv->second) {
        auto& slot = row[var];
        slot -= f * q;
        if (slot == 0) row.erase(var);
      }
    }
  }
  out.residual_rank = pivots.size();
  out.dimension = out.live_classes - out.residual_rank;
  return out;
}

namespace {

using Dense = Eigen::MatrixXd;

using MatVec = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct Ritz {
  double value = 0;
  double residual = 0;
  Eigen::VectorXd vector;
};

// Lowest Ritz pair of the operator restricted to the complement of
// `deflated`, restarted from the current Ritz vector until the residual
// is small or the value is clearly above `floor`.
Ritz lowest_pair(const MatVec& mv, std::size_t n, const std::vector<Eigen::VectorXd>& deflated,
                 Eigen::VectorXd start, double floor) {
  auto project = [&](Eigen::VectorXd& v) {
    for (const auto& d : deflated) v -= d.dot(v) * d;
  };
  const std::size_t steps = std::min<std::size_t>(n - deflated.size(), 200);
  Ritz best;
  Eigen::VectorXd w(n);
  for (int restart = 0; restart < 200; ++restart) {
    project(start);
    start.normalize();
    std::vector<Eigen::VectorXd> Q{start};
    std::vector<double> alpha, beta;
    for (std::size_t j = 0; j < steps; ++j) {
      mv(Q[j], w);
      project(w);
      alpha.push_back(Q[j].dot(w));
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& v : Q) w -= v.dot(w) * v;
      double b = w.norm();
      if (b < 1e-12 || Q.size() == steps) break;
      beta.push_back(b);
      Q.push_back(w / b);
    }
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) y += es.eigenvectors()(i, 0) * Q[i];
    project(y);
    y.normalize();
    mv(y, w);
    project(w);
    best.value = y.dot(w);
    best.residual = (w - best.value * y).norm();
    best.vector = y;
    if (best.residual < 1e-9 || best.value - best.residual > floor) break;
    start = y;
  }
  return best;
}

// Eigenvalues below the threshold, found one by one with deflation, plus
// the first eigenvalue above it.
std::vector<double> lanczos_low(const MatVec& mv, std::size_t n, const SpectrumOptions& opts) {
  std::vector<Eigen::VectorXd> deflated;
  std::vector<double> found;
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  while (deflated.size() < n) {
    Eigen::VectorXd start(n);
    for (std::size_t i = 0; i < n; ++i) start[i] = gauss(rng);
    auto r = lowest_pair(mv, n, deflated, start, opts.reject_below);
    found.push_back(r.value);
    if (r.value >= opts.zero_threshold) break;
    deflated.push_back(r.vector);
  }
  return found;
}

}  // namespace

FloatKernelResult float_kernel(const SparseOperator<double>& h, const SpectrumOptions& opts) {
  const std::size_t n = h.dim;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = h.row_ptr[r]; i < h.row_ptr[r + 1]; ++i) {
      auto a = find(r), b = find(h.col[i]);
      if (a != b) parent[a] = b;
    }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(i);

  FloatKernelResult out;
  out.components = blocks.size();
  out.gap = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> local(n);
  auto consider = [&](double ev) {
    if (ev < opts.zero_threshold) {
      ++out.dimension;
      out.max_zero = std::max(out.max_zero, ev);
    } else {
      out.gap = std::min(out.gap, ev);
      if (ev < opts.reject_below) out.ambiguous = true;
    }
  };
  for (const auto& [root, members] : blocks) {
    const std::size_t m = members.size();
    out.largest_component = std::max(out.largest_component, m);
    for (std::size_t i = 0; i < m; ++i) local[members[i]] = i;
    if (m <= opts.dense_limit) {
      Dense a = Dense::Zero(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t r = members[i];
        for (std::size_t e = h.row_ptr[r]; e < h.row_ptr[r + 1]; ++e) a(i, local[h.col[e]]) = h.val[e];
      }
      Eigen::SelfAdjointEigenSolver<Dense> es(a, Eigen::EigenvaluesOnly);
      for (int i = 0; i < es.eigenvalues().size(); ++i) consider(es.eigenvalues()[i]);
      continue;
    }
    auto mv = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
      y.setZero(static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t r = members[i];
        double acc = 0;
        for (std::size_t e = h.row_ptr[r]; e < h.row_ptr[r + 1]; ++e) acc += h.val[e] * x[local[h.col[e]]];
        y[i] = acc;
      }
    };
    for (double ev : lanczos_low(mv, m, opts)) consider(ev);
  }
  return out;
}

}  // namespace smw
