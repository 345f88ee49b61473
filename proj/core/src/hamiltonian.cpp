#include "smw/hamiltonian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace smw {

std::string to_string(Representation r) { return r == Representation::Link ? "link" : "reduced"; }

Representation parse_representation(const std::string& s) {
  if (s == "link") return Representation::Link;
  if (s == "reduced" || s == "site") return Representation::Reduced;
  throw UsageError("unknown representation '" + s + "' (expected link, reduced)");
}

std::size_t default_budget(const ModelSpec& m, Representation rep) {
  // chains of 12 (uncolored) or 8 (colored) links in the reduced representation
  if (rep == Representation::Reduced) return m.colored() ? 3 * 1679616 : 1594323;  // 3 6^8, 3^13
  return m.colored() ? 104976 : 531441;                                      // 18^4, 9^6
}

Basis::Basis(const ModelSpec& m, int n, Representation rep, bool double_site0)
    : rep_(rep), topo_(m.topology), n_(n), k_(m.k()), colored_(m.colored()),
      double_site0_(double_site0) {
  if (n < 1) throw UsageError("chain length must be at least 1");
  const int site_radix = k_ * (colored_ ? 2 : 1);
  if (rep_ == Representation::Link) {
    radix_.assign(n, k_ * k_ * (colored_ ? 2 : 1));
  } else if (topo_ == Topology::Open) {
    radix_.assign(n + 1, site_radix);
    if (!double_site0_) radix_[0] = k_;
  } else {
    radix_.assign(n, site_radix);
  }
  long double full = 1;
  for (int r : radix_) {
    stride_.push_back(full_);
    full *= r;
    full_ *= static_cast<Code>(r);
  }
  if (full > 4e18L) throw ResourceError("basis dimension overflows");
  if (topo_ == Topology::ClosedRing) {
    filtered_ = true;
    for (Code c = 0; c < full_; ++c)
      if (walk(c).final_height() == 0) codes_.push_back(c);
  }
}

std::optional<std::size_t> Basis::index(Code c) const {
  if (!filtered_) {
    if (c >= full_) return std::nullopt;
    return static_cast<std::size_t>(c);
  }
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

int Basis::element_id(const SisElement& e) const {
  return (e.domain - 1) * k_ + (e.range - 1) + k_ * k_ * (e.color ? e.color - 1 : 0);
}

SisElement Basis::element(int id) const {
  int color = colored_ ? id / (k_ * k_) + 1 : 0;
  id %= k_ * k_;
  return SisElement{k_, id / k_ + 1, id % k_ + 1, color};
}

int Basis::site_id(int index, int color) const { return (index - 1) + k_ * (color ? color - 1 : 0); }

bool Basis::slot_colored(int slot) const {
  if (!colored_) return false;
  if (rep_ == Representation::Reduced && topo_ == Topology::Open && slot == 0) return double_site0_;
  return true;
}

std::pair<int, int> Basis::site(int slot, int id) const {
  return {id % k_ + 1, slot_colored(slot) ? id / k_ + 1 : 0};
}

int Basis::link_slot(int j) const {
  if (topo_ == Topology::Open) return j - 1;
  return ((j - 1) % n_ + n_) % n_;
}

int Basis::site_slot(int s) const {
  if (topo_ == Topology::Open) return s;
  return (s % n_ + n_) % n_;
}

Walk Basis::walk(Code c) const {
  Walk w;
  w.steps.reserve(n_);
  if (rep_ == Representation::Link) {
    for (int j = 1; j <= n_; ++j) w.steps.push_back(element(digit(c, link_slot(j))));
    return w;
  }
  for (int j = 1; j <= n_; ++j) {
    int from = site_slot(j - 1), to = site_slot(j);
    auto [a, ca] = site(from, digit(c, from));
    auto [b, cb] = site(to, digit(c, to));
    (void)ca;
    w.steps.push_back(SisElement{k_, a, b, cb});
  }
  return w;
}

std::optional<Code> Basis::encode(const Walk& w) const {
  if (static_cast<int>(w.size()) != n_) return std::nullopt;
  Code c = 0;
  if (rep_ == Representation::Link) {
    for (int j = 1; j <= n_; ++j) c += static_cast<Code>(element_id(w.steps[j - 1])) * stride_[link_slot(j)];
  } else {
    if (connectivity(w).kind != ConnectivityKind::Connected) return std::nullopt;
    if (topo_ != Topology::Open && w.steps.back().range != w.steps.front().domain) return std::nullopt;
    if (topo_ == Topology::Open)
      c += static_cast<Code>(site_id(w.steps[0].domain, double_site0_ ? 1 : 0)) * stride_[0];
    for (int j = 1; j <= n_; ++j) {
      if (topo_ != Topology::Open && j == n_) {
        c += static_cast<Code>(site_id(w.steps[j - 1].range, w.steps[j - 1].color)) * stride_[0];
        continue;
      }
      c += static_cast<Code>(site_id(w.steps[j - 1].range, w.steps[j - 1].color)) * stride_[site_slot(j)];
    }
  }
  if (!index(c)) return std::nullopt;
  return c;
}

std::string Basis::label(Code c) const { return to_string(walk(c)); }

std::pair<int, int> Basis::endpoints(Code c) const {
  auto w = walk(c);
  return {w.steps.front().domain, w.steps.back().range};
}

std::uint32_t Placement::window(Code c) const {
  std::uint32_t w = 0;
  for (std::size_t q = 0; q < slots.size(); ++q)
    w += static_cast<std::uint32_t>((c / strides[q]) % static_cast<Code>(radices[q])) * local_strides[q];
  return w;
}

Code Placement::replace(Code c, std::uint32_t from, std::uint32_t to) const {
  for (std::size_t q = 0; q < slots.size(); ++q) {
    Code df = (from / local_strides[q]) % radices[q];
    Code dt = (to / local_strides[q]) % radices[q];
    c = c - df * strides[q] + dt * strides[q];
  }
  return c;
}

Hamiltonian::Hamiltonian(ModelSpec m, int n, HamiltonianOptions opts)
    : model_(std::move(m)), n_(n), opts_(opts), basis_([&] {
        model_.validate();
        if (n < 1) throw UsageError("chain length must be at least 1");
        long double dim = 1;
        int slots = opts.rep == Representation::Link || model_.topology != Topology::Open ? n : n + 1;
        int per = opts.rep == Representation::Link ? model_.k() * model_.k() : model_.k();
        if (model_.colored()) per *= 2;
        for (int i = 0; i < slots; ++i) dim *= per;
        if (opts.rep == Representation::Reduced && model_.topology == Topology::Open && model_.colored() &&
            !opts.double_site0)
          dim /= 2;
        std::size_t budget = opts.max_dimension ? opts.max_dimension : default_budget(model_, opts.rep);
        if (dim > static_cast<long double>(budget)) {
          std::ostringstream os;
          os << "basis dimension " << static_cast<double>(dim) << " exceeds budget " << budget;
          throw ResourceError(os.str());
        }
        return Basis(model_, n, opts.rep, opts.double_site0);
      }()) {
  TermOptions topts;
  topts.link_representation = opts_.rep == Representation::Link;
  topts.site0_penalty = opts_.site0_penalty;
  templates_ = model_terms(model_, topts);
  place_terms();
}

void Hamiltonian::place_terms() {
  const auto topo = model_.topology;
  const bool link = opts_.rep == Representation::Link;
  for (const auto& t : templates_) {
    if (t.weight == 0) continue;
    std::vector<int> starts;
    const int w = t.width;
    switch (t.anchor) {
      case Anchor::Bulk: {
        bool cyclic = topo == Topology::ClosedRing ||
                      (topo == Topology::ClosedEndpoints && t.kind == TermKind::Disconnected);
        int last = cyclic ? n_ : n_ - w + 1;
        for (int j = 1; j <= last; ++j) starts.push_back(j);
        break;
      }
      case Anchor::LeftEdge:
        if (topo != Topology::ClosedRing && w <= n_) starts.push_back(1);
        break;
      case Anchor::RightEdge:
        if (topo != Topology::ClosedRing && w <= n_) starts.push_back(n_ - w + 1);
        break;
    }
    for (int j : starts) {
      Placement p;
      p.kind = t.kind;
      p.first_link = j;
      p.weight = t.weight;
      if (link) {
        for (int q = 0; q < w; ++q) p.slots.push_back(basis_.link_slot(j + q));
      } else {
        for (int q = 0; q <= w; ++q) p.slots.push_back(basis_.site_slot(j - 1 + q));
      }
      std::set<int> distinct(p.slots.begin(), p.slots.end());
      if (distinct.size() != p.slots.size())
        throw UsageError("chain too short for a term of width " + std::to_string(w) + " on a closed chain");
      std::uint32_t local = 1;
      for (int s : p.slots) {
        p.strides.push_back(basis_.stride(s));
        p.radices.push_back(basis_.radix(s));
        p.local_strides.push_back(local);
        local *= static_cast<std::uint32_t>(basis_.radix(s));
      }
      p.lookup.assign(local, {});

      for (const auto& v : t.vectors) {
        if (link) {
          PlacedVector pv;
          for (const auto& e : v.entries) {
            std::uint32_t code = 0;
            for (int q = 0; q < w; ++q)
              code += static_cast<std::uint32_t>(basis_.element_id(e.links[q])) * p.local_strides[q];
            pv.entries.push_back({code, e.coeff});
          }
          pv.norm2 = v.norm2();
          p.vectors.push_back(std::move(pv));
          continue;
        }
        bool disconnected = false;
        for (const auto& e : v.entries)
          for (int q = 0; q + 1 < w; ++q)
            if (e.links[q].range != e.links[q + 1].domain) disconnected = true;
        if (disconnected) {
          if (v.entries.size() == 1) continue;
          throw std::logic_error("term mixes connected and disconnected configurations");
        }
        std::vector<int> contexts{0};
        if (basis_.slot_colored(p.slots[0])) contexts = {1, 2};
        for (int ctx : contexts) {
          PlacedVector pv;
          for (const auto& e : v.entries) {
            std::uint32_t code =
                static_cast<std::uint32_t>(basis_.site_id(e.links[0].domain, ctx)) * p.local_strides[0];
            for (int q = 0; q < w; ++q)
              code += static_cast<std::uint32_t>(basis_.site_id(e.links[q].range, e.links[q].color)) *
                      p.local_strides[q + 1];
            pv.entries.push_back({code, e.coeff});
          }
          pv.norm2 = v.norm2();
          p.vectors.push_back(std::move(pv));
        }
      }
      for (std::uint32_t vi = 0; vi < p.vectors.size(); ++vi)
        for (std::uint32_t ei = 0; ei < p.vectors[vi].entries.size(); ++ei)
          p.lookup[p.vectors[vi].entries[ei].local].push_back({vi, ei});
      placements_.push_back(std::move(p));
    }
  }
}

namespace {

template <class T>
T convert(const Rational& q);

template <>
Rational convert<Rational>(const Rational& q) {
  return q;
}

template <>
double convert<double>(const Rational& q) {
  return q.convert_to<double>();
}

}  // namespace

template <class T>
SparseOperator<T> Hamiltonian::assemble() const {
  SparseOperator<T> h;
  h.dim = basis_.size();
  h.row_ptr.assign(1, 0);
  std::vector<T> weights;
  for (const auto& p : placements_) weights.push_back(convert<T>(p.weight));
  std::vector<std::pair<std::size_t, T>> column;
  for (std::size_t s = 0; s < h.dim; ++s) {
    column.clear();
    Code c = basis_.code(s);
    for (std::size_t pi = 0; pi < placements_.size(); ++pi) {
      const auto& p = placements_[pi];
      std::uint32_t win = p.window(c);
      for (auto [vi, ei] : p.lookup[win]) {
        const auto& v = p.vectors[vi];
        T scale = weights[pi] * T(v.entries[ei].coeff) / T(v.norm2);
        for (const auto& e : v.entries) {
          auto t = basis_.index(p.replace(c, win, e.local));
          if (!t) throw std::logic_error("term leaves the basis sector");
          column.push_back({*t, scale * T(e.coeff)});
        }
      }
    }
    std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < column.size();) {
      std::size_t r = column[i].first;
      T acc = column[i].second;
      std::size_t j = i + 1;
      for (; j < column.size() && column[j].first == r; ++j) acc += column[j].second;
      if (acc != T(0)) {
        h.col.push_back(r);
        h.val.push_back(acc);
      }
      i = j;
    }
    h.row_ptr.push_back(h.col.size());
  }
  return h;
}

SparseOperator<Rational> Hamiltonian::rational() const { return assemble<Rational>(); }
SparseOperator<double> Hamiltonian::numeric() const { return assemble<double>(); }

template <class T>
std::vector<T> SparseOperator<T>::apply(const std::vector<T>& x) const {
  std::vector<T> y(dim, T(0));
  for (std::size_t r = 0; r < dim; ++r) {
    T acc = T(0);
    for (std::size_t i = row_ptr[r]; i < row_ptr[r + 1]; ++i)
      if (x[col[i]] != T(0)) acc += val[i] * x[col[i]];
    y[r] = acc;
  }
  return y;
}

template <class T>
bool SparseOperator<T>::symmetric() const {
  std::map<std::pair<std::size_t, std::size_t>, T> entries;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t i = row_ptr[r]; i < row_ptr[r + 1]; ++i) entries[{r, col[i]}] = val[i];
  for (const auto& [rc, v] : entries) {
    auto it = entries.find({rc.second, rc.first});
    if (it == entries.end() || it->second != v) return false;
  }
  return true;
}

template struct SparseOperator<Rational>;
template struct SparseOperator<double>;

Hamiltonian build_hamiltonian(const ModelSpec& m, int n, HamiltonianOptions opts) {
  return Hamiltonian(m, n, opts);
}

bool projector_idempotent(const TermTemplate& t) {
  // group vectors sharing configurations, realize each block densely
  std::map<std::vector<SisElement>, int> config_index;
  for (const auto& v : t.vectors)
    for (const auto& e : v.entries) config_index.emplace(e.links, static_cast<int>(config_index.size()));
  const int dim = static_cast<int>(config_index.size());
  std::vector<int> parent(dim);
  for (int i = 0; i < dim; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& v : t.vectors)
    for (const auto& e : v.entries) {
      int a = find(config_index[v.entries[0].links]), b = find(config_index[e.links]);
      if (a != b) parent[a] = b;
    }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < dim; ++i) blocks[find(i)].push_back(i);
  for (const auto& [root, members] : blocks) {
    const int m = static_cast<int>(members.size());
    std::map<int, int> local;
    for (int i = 0; i < m; ++i) local[members[i]] = i;
    std::vector<std::vector<Rational>> p(m, std::vector<Rational>(m, Rational(0)));
    for (const auto& v : t.vectors) {
      if (find(config_index[v.entries[0].links]) != root) continue;
      Rational inv(1, v.norm2());
      for (const auto& e1 : v.entries)
        for (const auto& e2 : v.entries)
          p[local[config_index[e1.links]]][local[config_index[e2.links]]] += inv * e1.coeff * e2.coeff;
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (p[i][j] != p[j][i]) return false;
        Rational acc = 0;
        for (int l = 0; l < m; ++l) acc += p[i][l] * p[l][j];
        if (acc != p[i][j]) return false;
      }
  }
  return true;
}

namespace {

template <class T>
std::string coordinates(const SparseOperator<T>& h, bool exact) {
  std::ostringstream os;
  os << "%%coordinate " << (exact ? "rational" : "real") << " symmetric\n";
  os << h.dim << ' ' << h.dim << ' ' << h.nnz() << '\n';
  os.precision(17);
  for (std::size_t r = 0; r < h.dim; ++r)
    for (std::size_t i = h.row_ptr[r]; i < h.row_ptr[r + 1]; ++i) {
      os << r << ' ' << h.col[i] << ' ';
      if constexpr (std::is_same_v<T, Rational>)
        os << to_string(h.val[i]);
      else
        os << h.val[i];
      os << '\n';
    }
  return os.str();
}

}  // namespace

std::string export_coordinates(const SparseOperator<Rational>& h) { return coordinates(h, true); }
std::string export_coordinates(const SparseOperator<double>& h) { return coordinates(h, false); }

}  // namespace smw
