#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qes/gauged_operator.hpp"
#include "qes/operator_matrix.hpp"
#include "qes/spectral.hpp"

namespace qes {

struct MaskSpectrum {
  GaugeMask mask;
  OperatorMatrix matrix;
  Spectrum spectrum;
};

/// Builds and diagonalizes one matrix per mask, in the given order.
std::vector<MaskSpectrum> compute_spectra(const ModelParams& params, const std::vector<GaugeMask>& masks);

enum class SweepVariable { epsilon, a };

/// epsilon sweeps use the roots (2, -1 + eps, -1 - eps); a sweeps keep the
/// roots of `fixed` and vary the coupling a.
struct SweepSpec {
  SweepVariable variable = SweepVariable::epsilon;
  Rational lo;
  Rational hi;
  std::size_t steps = 1;
  ModelParams fixed;
  /// nullopt selects list_valid_masks at every point.
  std::optional<std::vector<GaugeMask>> masks;
};

/// steps == 1 gives {lo}; otherwise lo + (hi - lo) i / (steps - 1), exactly.
std::vector<Rational> sweep_grid(const SweepSpec& spec);
ModelParams sweep_point(const SweepSpec& spec, const Rational& value);

struct SweepRow {
  Rational value;
  GaugeMask mask;
  std::size_t index = 0;
  std::complex<double> eigenvalue;
};

/// Grid points are evaluated on up to `threads` workers; rows come back in
/// grid order, then mask order, then eigenvalue order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 1);

/// Header "sweep_value,mask,eig_index,re,im".
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Header "mask,eig_index,re,im": the per-point body of sweep_csv.
std::string spectrum_csv(const std::vector<MaskSpectrum>& spectra);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

}  // namespace qes
