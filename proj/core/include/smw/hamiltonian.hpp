#pragma once

#include "smw/model.hpp"
#include "smw/sis.hpp"
#include "smw/terms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace smw {

enum class Representation { Link, Reduced };

std::string to_string(Representation r);
Representation parse_representation(const std::string& s);

using Code = std::uint64_t;

// Tensor-product basis stored as mixed-radix codes. Link representation:
// one slot per link, local states are the alphabet elements. Reduced
// representation: one slot per site holding (index, color); on an open
// chain site 0 carries no color unless `double_site0` is set. Closed
// chains have n slots with slot n identified with slot 0; the ring keeps
// only the zero-winding sector.
class Basis {
 public:
  Basis(const ModelSpec& m, int n, Representation rep, bool double_site0 = false);

  Representation representation() const { return rep_; }
  Topology topology() const { return topo_; }
  int n() const { return n_; }
  int k() const { return k_; }
  bool colored() const { return colored_; }
  int slots() const { return static_cast<int>(radix_.size()); }
  int radix(int slot) const { return radix_[slot]; }
  Code stride(int slot) const { return stride_[slot]; }

  std::size_t size() const { return filtered_ ? codes_.size() : static_cast<std::size_t>(full_); }
  Code code(std::size_t index) const { return filtered_ ? codes_[index] : index; }
  std::optional<std::size_t> index(Code c) const;

  int digit(Code c, int slot) const {
    return static_cast<int>((c / stride_[slot]) % static_cast<Code>(radix_[slot]));
  }

  // Local state <-> element / site label.
  int element_id(const SisElement& e) const;
  SisElement element(int id) const;
  int site_id(int index, int color) const;  // color 0 for uncolored slots
  std::pair<int, int> site(int slot, int id) const;
  bool slot_colored(int slot) const;

  // Link slot for 1-based link j, and reduced-site slot for site s, both
  // reduced modulo the chain on closed topologies.
  int link_slot(int j) const;
  int site_slot(int s) const;

  Walk walk(Code c) const;  // link elements, colors included
  std::optional<Code> encode(const Walk& w) const;
  std::string label(Code c) const;
  // Start and end index (for sector labels).
  std::pair<int, int> endpoints(Code c) const;

 private:
  Representation rep_;
  Topology topo_;
  int n_, k_;
  bool colored_, double_site0_;
  std::vector<int> radix_;
  std::vector<Code> stride_;
  Code full_ = 1;
  bool filtered_ = false;
  std::vector<Code> codes_;
};

struct PlacedEntry {
  std::uint32_t local = 0;  // window configuration, mixed radix over the window slots
  int coeff = 0;
};

struct PlacedVector {
  std::vector<PlacedEntry> entries;
  int norm2 = 0;
};

struct Placement {
  TermKind kind;
  int first_link = 1;
  Rational weight;
  std::vector<int> slots;
  std::vector<Code> strides;
  std::vector<int> radices;
  std::vector<std::uint32_t> local_strides;
  std::vector<PlacedVector> vectors;
  // window configuration -> (vector, entry) pairs containing it
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> lookup;

  std::uint32_t window(Code c) const;
  Code replace(Code c, std::uint32_t from, std::uint32_t to) const;
};

struct HamiltonianOptions {
  Representation rep = Representation::Reduced;
  bool double_site0 = false;
  bool site0_penalty = false;
  std::size_t max_dimension = 0;  // 0: default budget
};

std::size_t default_budget(const ModelSpec& m, Representation rep);

template <class T>
struct SparseOperator {
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::size_t> col;
  std::vector<T> val;

  std::size_t nnz() const { return col.size(); }
  std::vector<T> apply(const std::vector<T>& x) const;
  bool symmetric() const;
};

class Hamiltonian {
 public:
  Hamiltonian(ModelSpec m, int n, HamiltonianOptions opts = {});

  const ModelSpec& model() const { return model_; }
  int n() const { return n_; }
  const HamiltonianOptions& options() const { return opts_; }
  const Basis& basis() const { return basis_; }
  const std::vector<Placement>& placements() const { return placements_; }
  const std::vector<TermTemplate>& templates() const { return templates_; }

  SparseOperator<Rational> rational() const;
  SparseOperator<double> numeric() const;

 private:
  template <class T>
  SparseOperator<T> assemble() const;
  void place_terms();

  ModelSpec model_;
  int n_;
  HamiltonianOptions opts_;
  Basis basis_;
  std::vector<TermTemplate> templates_;
  std::vector<Placement> placements_;
};

Hamiltonian build_hamiltonian(const ModelSpec& m, int n, HamiltonianOptions opts = {});

// Dense realization of one term group on the span of its configurations:
// returns true iff P^2 = P exactly.
bool projector_idempotent(const TermTemplate& t);

std::string export_coordinates(const SparseOperator<Rational>& h);
std::string export_coordinates(const SparseOperator<double>& h);

}  // namespace smw
