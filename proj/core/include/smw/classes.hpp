#pragma once

#include "smw/hamiltonian.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace smw {

// Connected component of the move graph. Moves are the pairs of
// configurations sharing a multi-entry vector of a positively weighted
// term; single-entry vectors are penalties.
struct GroundClass {
  std::vector<std::size_t> members;  // basis indices, ascending
  int start = 0, end = 0;           // sector {start end}
  std::string seed;                 // walk of the smallest member
  bool penalized = false;
  bool annihilated = false;         // exact term-by-term check of the uniform superposition

  bool survives() const { return !penalized && annihilated; }
  std::string sector() const { return std::to_string(start) + std::to_string(end); }
};

struct ClassReport {
  std::size_t basis_size = 0;
  std::size_t total_classes = 0;
  std::vector<GroundClass> surviving;
  std::vector<GroundClass> rejected_unpenalized;  // no penalty hit but not annihilated
};

ClassReport ground_classes(const Hamiltonian& h);

// Number of move-graph classes without materializing member lists.
std::size_t count_classes(const Hamiltonian& h);

// Class containing the basis state for `w`, or nullopt when `w` is not in the basis.
std::optional<GroundClass> class_of(const Hamiltonian& h, const Walk& w);

// H applied to the uniform superposition over `c`, exactly.
bool verify_zero_energy(const SparseOperator<Rational>& h, const GroundClass& c);
// The same check term by term, without assembling H.
bool verify_zero_energy(const Hamiltonian& h, const GroundClass& c);

struct AddendumExhibit {
  std::string walk;
  bool zero_energy_original = false;
  bool zero_energy_corrected = false;
};

struct AddendumReport {
  int n = 0;
  std::size_t gsd_original = 0, gsd_corrected = 0;
  std::vector<AddendumExhibit> exhibits;      // those of length n
  std::vector<std::string> residual_non_smw;  // surviving corrected classes with no valid SMW member
};

AddendumReport addendum_regression(int n);

const std::vector<std::string>& addendum_exhibits();

struct PhasePoint {
  std::string label;
  ModelSpec model;
  int n = 0;
  std::size_t gsd = 0;
  std::size_t classes = 0;
};

// GSD over a list of models at one length.
std::vector<PhasePoint> phase_scan(const std::vector<std::pair<std::string, ModelSpec>>& grid, int n,
                                   HamiltonianOptions opts = {});

struct GrowthRow {
  int n = 0;
  std::size_t gsd = 0;
  double ratio = 0;  // gsd(n) / gsd(n-1), 0 for the first row
};

// Surviving-class counts over a length range (mu = 0 or phase II scans).
std::vector<GrowthRow> degeneracy_growth(const ModelSpec& m, int n_min, int n_max, HamiltonianOptions opts = {});

}  // namespace smw
