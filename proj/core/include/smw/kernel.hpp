#pragma once

#include "smw/hamiltonian.hpp"

#include <cstdint>
#include <vector>

namespace smw {

// Exact kernel of H = sum_v w_v |v><v| / <v|v> with w_v > 0: the common
// annihilator of every placed vector. Two-term rows with opposite
// coefficients merge configurations, unit rows force zeros, and whatever
// survives the fixpoint is eliminated over the rationals.
struct KernelResult {
  std::size_t dimension = 0;
  std::size_t basis_size = 0;
  std::size_t live_configs = 0;
  std::size_t live_classes = 0;
  std::size_t residual_rows = 0;
  std::size_t residual_rank = 0;
  // class id per basis index, -1 for configurations forced to zero
  std::vector<std::int32_t> class_of;
};

KernelResult exact_kernel(const Hamiltonian& h, bool keep_classes = false);

struct SpectrumOptions {
  double zero_threshold = 1e-10;
  double reject_below = 1e-6;
  std::size_t dense_limit = 2000;
};

struct FloatKernelResult {
  std::size_t dimension = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
  double max_zero = 0;        // largest eigenvalue counted as zero
  double gap = 0;             // smallest eigenvalue above the threshold
  bool ambiguous = false;     // some eigenvalue fell in the rejection band
};

// Floating-point cross-check: block-diagonalize by connectivity, dense
// eigensolver per block, Lanczos with deflation for large blocks.
FloatKernelResult float_kernel(const SparseOperator<double>& h, const SpectrumOptions& opts = {});

}  // namespace smw
