#pragma once

#include "smw/classes.hpp"
#include "smw/counting.hpp"

#include <string>
#include <vector>

namespace smw {

enum class EntropyMethod { Counts, DensityMatrix };
std::string to_string(EntropyMethod m);

struct SchmidtEntry {
  int h = 0;
  EndLabel label;
  Rational p;        // one Schmidt weight
  int log2_mult = 0; // multiplicity 2^log2_mult
};

struct SchmidtSpectrum {
  ModelSpec model;
  int n = 0;
  int a = 1, c = 1;
  std::vector<SchmidtEntry> entries;  // heights up to the cutoff
  int cutoff = 0;
  Rational total;           // sum of m p over every height, exact
  Rational truncated_mass;  // the part beyond the cutoff
};

// Half-chain spectrum of the uniform superposition over walks a -> c of length 2n.
SchmidtSpectrum schmidt_from_counts(CountTable& table, int n, int a, int c);
int height_cutoff(int n);

struct EntropyPoint {
  int n = 0;
  int a = 1, c = 1;
  Real S;
  EntropyMethod method = EntropyMethod::Counts;
};

Real entropy(const SchmidtSpectrum& s);
EntropyPoint entropy_from_counts(CountTable& table, int n, int a, int c);

// Builds rho_A for the normalized uniform superposition over `g` with the
// cut after link `cut` (midpoint when negative) and diagonalizes it.
struct StateEntropy {
  double S = 0;
  std::size_t left_states = 0;
  bool midpoint = true;
};
StateEntropy entropy_from_state(const Hamiltonian& h, const GroundClass& g, int cut = -1);

// Closed-form large-n entropy for the model and sector.
Real asymptotic_entropy(const ModelSpec& m, int n, int a, int c);
Real lambda_positive_constant();
Real log_law_constant();   // 1/2 ln(2 pi / 3) + gamma - 1/2
Real sqrt_law_leading();   // 2 ln 2 sqrt(2 sigma / pi)

enum class FitRegime { Log, Sqrt, Constant };
FitRegime fit_regime(const ModelSpec& m);

struct FitReport {
  FitRegime regime = FitRegime::Log;
  std::vector<EntropyPoint> points;
  Real leading;   // 1/2 (log), sqrt-n coefficient, or 0
  Real constant;  // extrapolated constant term
  std::vector<Real> residuals;
};

// Two-point extrapolation in 1/sqrt(n) from the last two grid points;
// residuals against the fitted form at every point.
FitReport entropy_scan_and_fit(CountTable& table, int a, int c, const std::vector<int>& ns);

std::string fit_json(const FitReport& f);
std::string entropy_csv(const ModelSpec& m, const std::vector<EntropyPoint>& pts);

}  // namespace smw
