#include "qes/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "qes/error.hpp"
#include "qes/gauged_operator.hpp"
#include "qes/operator_matrix.hpp"
#include "qes/oracles.hpp"
#include "qes/serialize.hpp"
#include "qes/spectral.hpp"
#include "qes/sweep.hpp"

namespace qes::verify {

namespace {

using nlohmann::json;
using cplx = std::complex<double>;

class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 7);
    return Rational(num(rng_), den(rng_));
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// (a, b, roots) with the roots summing to zero.
  ModelParams tuple(std::size_t n) {
    ModelParams p;
    p.n = n;
    p.a = next();
    p.b = next();
    const Rational e1 = next();
    const Rational e3 = next();
    p.roots = {e1, -e1 - e3, e3};
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

json params_json(const ModelParams& p) {
  return {{"n", p.n},
          {"a", p.a.str()},
          {"b", p.b.str()},
          {"m", p.m.str()},
          {"roots", {p.roots[0].str(), p.roots[1].str(), p.roots[2].str()}}};
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

/// Largest relative error of a greedy nearest matching between two lists of
/// equal length; infinity when the sizes differ.
double match_error(const std::vector<cplx>& got, const std::vector<cplx>& want) {
  if (got.size() != want.size()) return INFINITY;
  std::vector<bool> used(want.size(), false);
  double worst = 0.0;
  for (const auto& g : got) {
    std::size_t best = want.size();
    double best_err = INFINITY;
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (used[k]) continue;
      const double err = std::abs(g - want[k]) / std::max(1.0, std::abs(want[k]));
      if (err < best_err) {
        best_err = err;
        best = k;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_err);
  }
  return worst;
}

std::vector<cplx> as_complex(const std::array<Rational, 3>& values) {
  std::vector<cplx> out;
  for (const auto& v : values) out.emplace_back(v.to_double(), 0.0);
  return out;
}

/// Every diagonalization made by the checks, for the eigensolver audit.
struct Audit {
  struct Entry {
    std::string label;
    RationalMatrix exact;
    Spectrum spectrum;
  };
  std::vector<Entry> entries;

  const Spectrum& diagonalize(const RationalMatrix& exact, std::string label) {
    entries.push_back({std::move(label), exact, eigenvalues(to_float(exact))});
    return entries.back().spectrum;
  }
};

ModelParams degenerate_instance(const Rational& a) {
  ModelParams p;
  p.n = 2;
  p.m = Rational(2);
  p.a = a;
  p.roots = {Rational(2), Rational(-1), Rational(-1)};
  return p;
}

CheckResult check_reference_matrices(RandomRationals& rng) {
  CheckResult r{"reference-matrices", 1, true, "", json::array()};
  int compared = 0;
  for (int t = 0; t < 5; ++t) {
    ModelParams p = rng.tuple(2);
    p.m = Rational(2);
    const ReferenceMatrices tpl = reference_matrix_templates(p.a, p.b, p.g2(), p.g3(), p.roots);
    const OperatorMatrix six = build_matrix(build_gauged_operator(p, GaugeMask()));
    ++compared;
    if (!(six.entries == tpl.six)) {
      r.passed = false;
      r.witnesses.push_back({{"matrix", "6x6"}, {"params", params_json(p)}, {"built", to_json(six)}});
    }
    // The reference h_i are the b = 0 instances.
    ModelParams p0 = p;
    p0.b = Rational(0);
    const ReferenceMatrices tpl0 = reference_matrix_templates(p0.a, p0.b, p0.g2(), p0.g3(), p0.roots);
    for (int i = 1; i <= 3; ++i) {
      const OperatorMatrix h = build_matrix(build_gauged_operator(p0, h_mask(i)));
      ++compared;
      if (!(h.entries == tpl0.h[i - 1])) {
        r.passed = false;
        r.witnesses.push_back({{"matrix", "h" + std::to_string(i)}, {"params", params_json(p0)}, {"built", to_json(h)}});
      }
    }
  }
  r.summary = std::to_string(compared) + " matrices compared exactly";
  return r;
}

CheckResult check_degenerate(Audit& audit) {
  CheckResult r{"degenerate", 2, true, "", json::array()};
  double worst = 0.0;
  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(5)}) {
    const ModelParams p = degenerate_instance(a);
    const DegenerateForms forms = degenerate_closed_forms(a);
    std::vector<cplx> six_expected = as_complex(forms.six_only);
    for (const auto& v : as_complex(forms.shared_h1)) six_expected.push_back(v);
    const std::vector<std::pair<GaugeMask, std::vector<cplx>>> expected = {
        {GaugeMask(), six_expected},
        {h_mask(1), as_complex(forms.shared_h1)},
        {h_mask(2), as_complex(forms.h23)},
        {h_mask(3), as_complex(forms.h23)},
    };
    for (const auto& [mask, want] : expected) {
      const Spectrum& s = audit.diagonalize(build_matrix(build_gauged_operator(p, mask)).entries,
                                            "degenerate a=" + a.str() + " mask=" + mask.str());
      const double err = match_error(s.eigenvalues, want);
      worst = std::max(worst, err);
      if (!(err <= kClosedFormTol)) {
        r.passed = false;
        json got = json::array();
        for (auto z : s.eigenvalues) got.push_back(complex_json(z));
        r.witnesses.push_back({{"a", a.str()}, {"mask", mask.str()}, {"eigenvalues", got}, {"error", err}});
      }
    }
  }
  r.summary = "max relative error " + format_double(worst);
  return r;
}

CheckResult check_oscillator(Audit& audit) {
  CheckResult r{"oscillator", 3, true, "", json::array()};
  const ModelParams p = degenerate_instance(Rational(0));
  std::size_t count = 0;
  for (GaugeMask mask : list_valid_masks(p)) {
    const Spectrum& s =
        audit.diagonalize(build_matrix(build_gauged_operator(p, mask)).entries, "oscillator mask=" + mask.str());
    for (auto lambda : s.eigenvalues) {
      ++count;
      const auto j = oscillator_level(lambda, kOscillatorTol);
      json w = {{"mask", mask.str()}, {"eigenvalue", complex_json(lambda)}};
      if (j) {
        w["j"] = {j->first, j->second};
      } else {
        r.passed = false;
        w["j"] = nullptr;
      }
      r.witnesses.push_back(w);
    }
  }
  if (count != 15) r.passed = false;
  r.summary = std::to_string(count) + " eigenvalues on the ladder 3(j1^2+j2^2)-40";
  return r;
}

CheckResult check_counting(Audit& audit) {
  CheckResult r{"counting", 4, true, "", json::array()};
  // Eigenvalues actually produced at N = m = 2, b = 0.
  const ModelParams p = degenerate_instance(Rational(1, 3));
  std::size_t produced = 0;
  for (GaugeMask mask : list_valid_masks(p))
    produced += audit.diagonalize(build_matrix(build_gauged_operator(p, mask)).entries, "counting mask=" + mask.str())
                    .eigenvalues.size();
  if (produced != 15) {
    r.passed = false;
    r.witnesses.push_back({{"case", "N=2 m=2"}, {"eigenvalues", produced}});
  }
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (long twice = 0; twice <= 8; ++twice) {
      const Rational m(twice, 2);
      const CountReport report = count_symmetric_solutions(n, m);
      ++cases;
      const bool lame_ok = n != 1 || !m.is_integer() || report.total == static_cast<std::size_t>(4 * m.to_long() + 1);
      if (!report.match || !lame_ok) {
        r.passed = false;
        r.witnesses.push_back(
            {{"n", n}, {"m", m.str()}, {"mask_total", report.total}, {"formula", report.formula}});
      }
    }
  r.summary = std::to_string(produced) + " eigenvalues at N=m=2; " + std::to_string(cases) + " (N, m) counts agree";
  return r;
}

/// Visits every (params, mask) of the closure grid: N <= 3, m~ <= 3, all
/// eight masks, five random tuples per N.
void closure_grid(std::uint64_t seed, const std::function<void(const ModelParams&, GaugeMask)>& visit) {
  RandomRationals rng(seed + 5);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 5; ++t) {
      ModelParams base = rng.tuple(n);
      for (GaugeMask mask : GaugeMask::all()) {
        const Rational nf(mask.size());
        for (long mt = 0; mt <= 3; ++mt) {
          ModelParams p = base;
          p.m = Rational(mt) - base.b * nf + nf / Rational(2);
          visit(p, mask);
        }
      }
    }
}

CheckResult check_closure(const Options& options) {
  CheckResult r{"closure", 5, true, "", json::array()};
  std::size_t built = 0;
  closure_grid(options.seed, [&](const ModelParams& p, GaugeMask mask) {
    try {
      const OperatorMatrix mat = build_matrix(build_gauged_operator(p, mask, options.injected_exponent));
      ++built;
    } catch (const NonCancellingPole& e) {
      r.passed = false;
      if (r.witnesses.size() < 20)
        r.witnesses.push_back({{"error", "NonCancellingPole"}, {"mask", mask.str()}, {"params", params_json(p)}, {"what", e.what()}});
    } catch (const OperatorNotClosed& e) {
      r.passed = false;
      if (r.witnesses.size() < 20)
        r.witnesses.push_back({{"error", "OperatorNotClosed"}, {"mask", mask.str()}, {"params", params_json(p)}, {"what", e.what()}});
    }
  });
  r.summary = std::to_string(built) + " operators closed on their invariant space";
  return r;
}

CheckResult check_negative_gauge() {
  CheckResult r{"negative-gauge", 6, true, "", json::array()};
  ModelParams p = degenerate_instance(Rational(1, 2));
  p.roots = {Rational(2), Rational(-3, 2), Rational(-1, 2)};
  std::size_t rejected = 0;
  for (GaugeMask mask : GaugeMask::all()) {
    if (mask.empty()) continue;
    // Keep m~ integral so only the pole can fail.
    ModelParams q = p;
    q.m = Rational(2) + Rational(mask.size()) / Rational(2);
    try {
      (void)build_gauged_operator(q, mask, Rational(1, 3));
      r.passed = false;
      r.witnesses.push_back({{"mask", mask.str()}, {"error", nullptr}});
    } catch (const NonCancellingPole& e) {
      ++rejected;
      r.witnesses.push_back({{"mask", mask.str()}, {"error", "NonCancellingPole"}});
    }
  }
  r.summary = "exponent 1/3 rejected for " + std::to_string(rejected) + " of 7 non-empty masks";
  return r;
}

CheckResult check_raising(const Options& options) {
  CheckResult r{"raising", 7, true, "", json::array()};
  std::size_t checks = 0;
  closure_grid(options.seed, [&](const ModelParams& p, GaugeMask mask) {
    const GaugedOperator op = build_gauged_operator(p, mask);
    for (unsigned d = 0; d <= op.degree(); ++d) {
      ++checks;
      if (!raising_coefficient_check(op, d)) {
        r.passed = false;
        if (r.witnesses.size() < 20)
          r.witnesses.push_back({{"mask", mask.str()}, {"degree", d}, {"params", params_json(p)}});
      }
    }
  });
  r.summary = std::to_string(checks) + " degree levels match the raising formula";
  return r;
}

CheckResult check_decoupling(Audit& audit) {
  CheckResult r{"decoupling", 8, true, "", json::array()};
  double worst = 0.0;
  for (const auto& roots : {std::array<Rational, 3>{Rational(2), Rational(-1), Rational(-1)},
                            std::array<Rational, 3>{Rational(2), Rational(-3, 2), Rational(-1, 2)}})
    for (long m : {1L, 2L})
      for (const Rational& b : {Rational(0), Rational(1, 4)}) {
        ModelParams p;
        p.m = Rational(m);
        p.b = b;
        p.roots = roots;
        p.n = 1;
        audit.diagonalize(build_matrix(build_gauged_operator(p, GaugeMask())).entries, "decoupling N=1");
        p.n = 2;
        audit.diagonalize(build_matrix(build_gauged_operator(p, GaugeMask())).entries, "decoupling N=2");
        const DecouplingReport report = decoupling_check(p, kDecouplingTol);
        worst = std::max(worst, report.max_error);
        if (!report.passed) {
          r.passed = false;
          r.witnesses.push_back({{"params", params_json(p)}, {"max_error", report.max_error}});
        }
      }
  r.summary = "max relative error " + format_double(worst);
  return r;
}

CheckResult check_figure(Audit& audit) {
  CheckResult r{"figure", 9, true, "", json::array()};
  for (const Rational& a : {Rational(0), Rational(5)}) {
    SweepSpec spec;
    spec.variable = SweepVariable::epsilon;
    spec.lo = Rational(0);
    spec.hi = Rational(1, 2);
    spec.steps = 2;
    spec.fixed = degenerate_instance(a);
    const std::vector<SweepRow> rows = run_sweep(spec);
    std::map<std::pair<std::string, std::string>, std::vector<cplx>> by_point;
    for (const auto& row : rows) by_point[{row.value.str(), row.mask.str()}].push_back(row.eigenvalue);
    for (const Rational& eps : sweep_grid(spec))
      for (GaugeMask mask : list_valid_masks(sweep_point(spec, eps)))
        audit.diagonalize(build_matrix(build_gauged_operator(sweep_point(spec, eps), mask)).entries,
                          "figure a=" + a.str() + " eps=" + eps.str() + " mask=" + mask.str());

    // Crossings at eps = 0: three 6x6 eigenvalues coincide with h_1, h_2 == h_3.
    const auto& six = by_point[{"0", "none"}];
    const auto& h1 = by_point[{"0", h_mask(1).str()}];
    const auto& h2 = by_point[{"0", h_mask(2).str()}];
    const auto& h3 = by_point[{"0", h_mask(3).str()}];
    std::size_t coincident = 0;
    for (const auto& x : h1)
      for (const auto& y : six)
        if (std::abs(x - y) <= kCrossingTol * std::max(1.0, std::abs(y))) {
          ++coincident;
          break;
        }
    const double h23 = match_error(h2, h3);
    const bool crossing_ok = coincident == 3 && h1.size() == 3 && h23 <= kCrossingTol;
    if (!crossing_ok) r.passed = false;
    r.witnesses.push_back({{"a", a.str()}, {"eps", "0"}, {"six_h1_coincidences", coincident}, {"h2_h3_error", h23}});

    if (a == Rational(5)) {
      std::vector<cplx> all;
      for (const auto& row : rows)
        if (row.value == Rational(1, 2)) all.push_back(row.eigenvalue);
      double min_gap = INFINITY;
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) min_gap = std::min(min_gap, std::abs(all[i] - all[j]));
      const bool split = all.size() == 15 && min_gap > kSplitGap;
      if (!split) r.passed = false;
      r.witnesses.push_back({{"a", "5"}, {"eps", "1/2"}, {"eigenvalues", all.size()}, {"min_gap", min_gap}});
    }
  }
  r.summary = "degeneracy at eps=0 for a in {0,5}; split at eps=1/2, a=5";
  return r;
}

RationalMatrix unimodular(RandomRationals& rng, std::size_t n) {
  RationalMatrix lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    lower(i, i) = upper(i, i) = Rational(1);
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Rational(rng.integer(-1, 1));
      upper(j, i) = Rational(rng.integer(-1, 1));
    }
  }
  return multiply(lower, upper);
}

CheckResult check_eigensolver(const Audit& audit, const Options& options) {
  CheckResult r{"eigensolver", 10, true, "", json::array()};
  std::size_t audited = 0;
  for (const auto& e : audit.entries) {
    ++audited;
    const auto& ev = e.spectrum.eigenvalues;
    const double scale_sum = [&] {
      double s = std::fabs(e.exact.trace().to_double());
      for (auto z : ev) s += std::abs(z);
      return std::max(1.0, s);
    }();
    const double trace_err = std::abs(e.spectrum.sum() - e.exact.trace().to_double()) / scale_sum;
    double det_err = 0.0;
    if (e.exact.dim() <= 10) {
      const double det = determinant(e.exact).to_double();
      double scale = 1.0;
      for (auto z : ev) scale *= std::max(1.0, std::abs(z));
      det_err = std::abs(e.spectrum.product() - det) / std::max(std::fabs(det), scale);
    }
    const bool paired = conjugate_paired(e.spectrum);
    if (!(trace_err <= kTraceTol) || !(det_err <= kDeterminantTol) || !paired) {
      r.passed = false;
      r.witnesses.push_back({{"label", e.label}, {"trace_error", trace_err}, {"det_error", det_err}, {"paired", paired}});
    }
  }

  // Exact similarity transforms of the audited matrices and of random
  // integer matrices, dim <= 6.
  RandomRationals rng(options.seed + 10);
  std::vector<RationalMatrix> subjects;
  for (const auto& e : audit.entries)
    if (e.exact.dim() <= 6 && subjects.size() < 12) subjects.push_back(e.exact);
  for (std::size_t n = 1; n <= 6; ++n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.integer(-9, 9));
    subjects.push_back(m);
  }
  double worst = 0.0;
  for (const RationalMatrix& m : subjects) {
    const RationalMatrix p = unimodular(rng, m.dim());
    const RationalMatrix similar = multiply(inverse(p), multiply(m, p));
    const Spectrum base = eigenvalues(to_float(m));
    const Spectrum moved = eigenvalues(to_float(similar));
    const double err = match_error(moved.eigenvalues, base.eigenvalues);
    worst = std::max(worst, err);
    if (!(err <= kSimilarityTol) || !conjugate_paired(moved)) {
      r.passed = false;
      r.witnesses.push_back({{"dim", m.dim()}, {"similarity_error", err}});
    }
  }
  r.summary = std::to_string(audited) + " diagonalizations audited; " + std::to_string(subjects.size()) +
              " similarity transforms, max error " + format_double(worst);
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"reference-matrices", "degenerate", "oscillator", "counting",
                                                 "closure",        "negative-gauge", "raising", "decoupling",
                                                 "figure",         "eigensolver"};
  return names;
}

std::vector<CheckResult> run(const Options& options) {
  if (options.only && std::find(check_names().begin(), check_names().end(), *options.only) == check_names().end())
    throw InvalidParams("unknown check '" + *options.only + "'");
  const auto wanted = [&](const std::string& name) { return !options.only || *options.only == name; };
  const bool audit_needed = wanted("eigensolver");

  RandomRationals rng(options.seed);
  Audit audit;
  std::vector<CheckResult> results;
  const auto record = [&](const std::string& name, auto&& fn) {
    if (wanted(name)) {
      results.push_back(fn());
    } else if (audit_needed) {
      (void)fn();
    }
  };
  if (wanted("reference-matrices")) results.push_back(check_reference_matrices(rng));
  record("degenerate", [&] { return check_degenerate(audit); });
  record("oscillator", [&] { return check_oscillator(audit); });
  record("counting", [&] { return check_counting(audit); });
  if (wanted("closure")) results.push_back(check_closure(options));
  if (wanted("negative-gauge")) results.push_back(check_negative_gauge());
  if (wanted("raising")) results.push_back(check_raising(options));
  record("decoupling", [&] { return check_decoupling(audit); });
  record("figure", [&] { return check_figure(audit); });
  if (audit_needed) results.push_back(check_eigensolver(audit, options));
  return results;
}

json report_json(const std::vector<CheckResult>& results) {
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"name", r.name},
                      {"criterion", r.criterion},
                      {"passed", r.passed},
                      {"summary", r.summary},
                      {"witnesses", r.witnesses}});
  }
  return {{"passed", all}, {"checks", checks}};
}

}  // namespace qes::verify
