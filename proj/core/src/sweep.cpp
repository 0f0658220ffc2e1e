#include "qes/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <future>

#include "qes/error.hpp"

namespace qes {

std::vector<MaskSpectrum> compute_spectra(const ModelParams& params, const std::vector<GaugeMask>& masks) {
  std::vector<MaskSpectrum> out;
  out.reserve(masks.size());
  for (GaugeMask mask : masks) {
    OperatorMatrix matrix = build_matrix(build_gauged_operator(params, mask));
    Spectrum spectrum = eigenvalues(to_float(matrix));
    out.push_back({mask, std::move(matrix), std::move(spectrum)});
  }
  return out;
}

std::vector<Rational> sweep_grid(const SweepSpec& spec) {
  if (spec.steps < 1) throw InvalidParams("sweep needs at least one step");
  if (spec.hi < spec.lo) throw InvalidParams("sweep range must satisfy lo <= hi");
  if (spec.steps == 1) return {spec.lo};
  std::vector<Rational> grid;
  const Rational span = spec.hi - spec.lo;
  const Rational intervals(static_cast<long>(spec.steps - 1));
  for (std::size_t i = 0; i < spec.steps; ++i) grid.push_back(spec.lo + span * Rational(static_cast<long>(i)) / intervals);
  return grid;
}

ModelParams sweep_point(const SweepSpec& spec, const Rational& value) {
  ModelParams params = spec.fixed;
  if (spec.variable == SweepVariable::epsilon) {
    params.roots = {Rational(2), Rational(-1) + value, Rational(-1) - value};
  } else {
    params.a = value;
  }
  return params;
}

namespace {

std::vector<SweepRow> sweep_one(const SweepSpec& spec, const Rational& value) {
  const ModelParams params = sweep_point(spec, value);
  const std::vector<GaugeMask> masks = spec.masks ? *spec.masks : list_valid_masks(params);
  std::vector<SweepRow> rows;
  for (const MaskSpectrum& ms : compute_spectra(params, masks))
    for (std::size_t i = 0; i < ms.spectrum.eigenvalues.size(); ++i)
      rows.push_back({value, ms.mask, i, ms.spectrum.eigenvalues[i]});
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
  const std::vector<Rational> grid = sweep_grid(spec);
  spec.fixed.validate();
  threads = std::max(1u, threads);
  std::vector<SweepRow> rows;
  for (std::size_t start = 0; start < grid.size(); start += threads) {
    const std::size_t stop = std::min(grid.size(), start + threads);
    std::vector<std::future<std::vector<SweepRow>>> batch;
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async, sweep_one, std::cref(spec),
                                 std::cref(grid[i])));
    for (auto& f : batch) {
      auto part = f.get();
      rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return rows;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{}", x);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "sweep_value,mask,eig_index,re,im\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{}\n", format_double(r.value.to_double()), r.mask.str(), r.index,
                       format_double(r.eigenvalue.real()), format_double(r.eigenvalue.imag()));
  return out;
}

std::string spectrum_csv(const std::vector<MaskSpectrum>& spectra) {
  std::string out = "mask,eig_index,re,im\n";
  for (const auto& ms : spectra)
    for (std::size_t i = 0; i < ms.spectrum.eigenvalues.size(); ++i)
      out += fmt::format("{},{},{},{}\n", ms.mask.str(), i, format_double(ms.spectrum.eigenvalues[i].real()),
                         format_double(ms.spectrum.eigenvalues[i].imag()));
  return out;
}

}  // namespace qes
