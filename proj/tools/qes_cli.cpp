// qes: exact matrices and spectra of the gauged elliptic Calogero-Sutherland
// operator on its invariant symmetric-polynomial spaces.
//
// Exit codes: 0 success, 1 verification or numerical failure, 2 bad parameters.

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "qes/error.hpp"
#include "qes/gauged_operator.hpp"
#include "qes/operator_matrix.hpp"
#include "qes/serialize.hpp"
#include "qes/spectral.hpp"
#include "qes/sweep.hpp"
#include "qes/verification.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitBadParams = 2;

struct CommonFlags {
  std::string n = "2";
  std::string m = "2";
  std::string a = "0";
  std::string b = "0";
  std::string roots = "2,-1,-1";
  std::string mask = "all";
  std::string format = "json";
  std::string out;
};

void add_model_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--n", f.n, "Number of particles N")->capture_default_str();
  cmd->add_option("--m", f.m, "Degree parameter m (integer or half-integer)")->capture_default_str();
  cmd->add_option("--a", f.a, "Coupling a (p/q or exact decimal)")->capture_default_str();
  cmd->add_option("--b", f.b, "Coupling b (p/q or exact decimal)")->capture_default_str();
  cmd->add_option("--roots", f.roots, "Roots e1,e2,e3 of p(z); must sum to zero")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--out", f.out, "Write output to FILE instead of stdout");
}

qes::ModelParams parse_params(const CommonFlags& f) {
  qes::ModelParams p;
  const qes::Rational n = qes::Rational::parse(f.n);
  if (!n.is_integer() || n.sign() <= 0) throw qes::InvalidParams("--n must be a positive integer");
  p.n = static_cast<std::size_t>(n.to_long());
  p.m = qes::Rational::parse(f.m);
  p.a = qes::Rational::parse(f.a);
  p.b = qes::Rational::parse(f.b);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = f.roots.find(',', start)) != std::string::npos; start = pos + 1)
    parts.push_back(f.roots.substr(start, pos - start));
  parts.push_back(f.roots.substr(start));
  if (parts.size() != 3) throw qes::InvalidParams("--roots needs three comma-separated values");
  for (int i = 0; i < 3; ++i) p.roots[i] = qes::Rational::parse(parts[i]);
  p.validate();
  return p;
}

std::vector<qes::GaugeMask> parse_masks(const std::string& text, const qes::ModelParams& p) {
  if (text == "all") return qes::list_valid_masks(p);
  return {qes::GaugeMask::parse(text)};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw qes::InvalidParams("cannot open output file '" + out + "'");
  file << text;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

int cmd_matrix(const CommonFlags& f) {
  const qes::ModelParams p = parse_params(f);
  const auto masks = parse_masks(f.mask, p);
  if (masks.size() != 1) throw qes::InvalidParams("matrix needs exactly one --mask");
  const qes::OperatorMatrix mat = qes::build_matrix(qes::build_gauged_operator(p, masks.front()));
  emit(qes::export_matrix(mat, f.format == "csv" ? qes::ExportFormat::csv : qes::ExportFormat::json), f.out);
  return 0;
}

int cmd_spectrum(const CommonFlags& f) {
  const qes::ModelParams p = parse_params(f);
  const auto spectra = qes::compute_spectra(p, parse_masks(f.mask, p));
  if (f.format == "csv") {
    emit(qes::spectrum_csv(spectra), f.out);
    return 0;
  }
  json out = json::array();
  for (const auto& ms : spectra) {
    json values = json::array();
    for (auto z : ms.spectrum.eigenvalues) values.push_back(complex_json(z));
    out.push_back({{"mask", ms.mask.str()},
                   {"m_tilde", ms.matrix.m_tilde.str()},
                   {"dim", ms.matrix.dim()},
                   {"eigenvalues", values},
                   {"iterations", ms.spectrum.report.iterations},
                   {"trace_error", ms.spectrum.report.trace_error}});
  }
  emit(out.dump(2) + "\n", f.out);
  return 0;
}

struct SweepFlags {
  std::string variable = "epsilon";
  std::string range = "0:1:11";
  unsigned threads = 0;
};

int cmd_sweep(const CommonFlags& f, const SweepFlags& s) {
  qes::SweepSpec spec;
  spec.fixed = parse_params(f);
  spec.variable = s.variable == "a" ? qes::SweepVariable::a : qes::SweepVariable::epsilon;
  const auto first = s.range.find(':');
  const auto second = first == std::string::npos ? first : s.range.find(':', first + 1);
  if (second == std::string::npos) throw qes::InvalidParams("--range must be lo:hi:steps");
  spec.lo = qes::Rational::parse(s.range.substr(0, first));
  spec.hi = qes::Rational::parse(s.range.substr(first + 1, second - first - 1));
  const qes::Rational steps = qes::Rational::parse(s.range.substr(second + 1));
  if (!steps.is_integer() || steps.sign() <= 0) throw qes::InvalidParams("sweep steps must be a positive integer");
  spec.steps = static_cast<std::size_t>(steps.to_long());
  if (f.mask != "all") spec.masks = std::vector<qes::GaugeMask>{qes::GaugeMask::parse(f.mask)};
  // Validate every grid point before any work starts.
  for (const auto& v : qes::sweep_grid(spec)) {
    const qes::ModelParams point = qes::sweep_point(spec, v);
    point.validate();
    if (spec.masks)
      for (auto mask : *spec.masks) {
        const qes::Rational mt = qes::shifted_degree(point, mask);
        if (!mt.is_integer() || mt.sign() < 0)
          throw qes::InvalidDegree("mask " + mask.str() + " has shifted degree " + mt.str());
      }
  }
  const unsigned threads = s.threads ? s.threads : std::max(1u, std::thread::hardware_concurrency());
  emit(qes::sweep_csv(qes::run_sweep(spec, threads)), f.out);
  return 0;
}

struct VerifyFlags {
  std::string only;
  std::string inject_exponent;
};

int cmd_verify(const CommonFlags& f, const VerifyFlags& v) {
  qes::verify::Options options;
  if (!v.only.empty()) options.only = v.only;
  if (!v.inject_exponent.empty()) options.injected_exponent = qes::Rational::parse(v.inject_exponent);
  const auto results = qes::verify::run(options);
  for (const auto& r : results)
    std::cerr << fmt::format("[{}] criterion {:>2} {:<18} {}\n", r.passed ? "PASS" : "FAIL", r.criterion, r.name,
                             r.summary);
  const json report = qes::verify::report_json(results);
  emit(report.dump(2) + "\n", f.out);
  return report.at("passed").get<bool>() ? 0 : kExitFailure;
}

int cmd_masks(const CommonFlags& f) {
  const qes::ModelParams p = parse_params(f);
  json out = json::array();
  std::string text;
  for (auto mask : qes::list_valid_masks(p)) {
    const qes::Rational mt = qes::shifted_degree(p, mask);
    const std::size_t dim = qes::binomial(mt.to_long() + static_cast<long>(p.n), static_cast<long>(p.n));
    out.push_back({{"mask", mask.str()}, {"n_f", mask.size()}, {"m_tilde", mt.str()}, {"dim", dim}});
    text += fmt::format("{:<5} n_f={} m~={} dim={}\n", mask.str(), mask.size(), mt.str(), dim);
  }
  emit(f.format == "json" ? out.dump(2) + "\n" : text, f.out);
  return 0;
}

std::string gauge_prefix(const qes::ModelParams& p, qes::GaugeMask mask) {
  if (mask.empty()) return "";
  const qes::Rational nu = qes::Rational(1, 2) - p.b;
  std::string out = "prod_k";
  for (int i : mask.indices()) {
    const qes::Rational& e = p.roots[i - 1];
    const std::string shift = e.is_zero() ? "" : (e.sign() > 0 ? " - " + e.str() : " + " + (-e).str());
    out += fmt::format(" (z_k{})^({})", shift, nu.str());
  }
  return out;
}

std::string format_coefficient(std::complex<double> c) {
  if (std::fabs(c.imag()) <= 1e-12 * std::max(1.0, std::abs(c))) return fmt::format("{:.10g}", c.real());
  return fmt::format("({:.10g}{:+.10g}i)", c.real(), c.imag());
}

int cmd_eigenfunctions(const CommonFlags& f) {
  const qes::ModelParams p = parse_params(f);
  json out = json::array();
  std::string text;
  for (const auto& ms : qes::compute_spectra(p, parse_masks(f.mask, p))) {
    const qes::DenseMatrix dense = qes::to_float(ms.matrix);
    const std::string prefix = gauge_prefix(p, ms.mask);
    text += fmt::format("mask {} (m~={}, dim {}){}\n", ms.mask.str(), ms.matrix.m_tilde.str(), ms.matrix.dim(),
                        prefix.empty() ? "" : ", gauge prefix " + prefix);
    for (auto lambda : ms.spectrum.eigenvalues) {
      auto v = qes::eigenvector(dense, lambda);
      std::size_t big = 0;
      for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[big])) big = i;
      const auto scale = v[big];
      json coeffs = json::array();
      std::string poly;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto c = v[i] / scale;
        if (std::abs(c) <= 1e-12) continue;
        coeffs.push_back({{"l", ms.matrix.basis[i].exponents()}, {"re", c.real()}, {"im", c.imag()}});
        std::string monomial;
        for (std::size_t k = 0; k < p.n; ++k) {
          const unsigned e = ms.matrix.basis[i][k];
          if (e == 0) continue;
          if (!monomial.empty()) monomial += "*";
          monomial += fmt::format("tau{}{}", k + 1, e > 1 ? fmt::format("^{}", e) : "");
        }
        const bool negative = std::fabs(c.imag()) <= 1e-12 * std::abs(c) && c.real() < 0;
        if (!poly.empty()) poly += negative ? " - " : " + ";
        else if (negative) poly += "-";
        poly += format_coefficient(negative ? -c : c) + (monomial.empty() ? "" : "*" + monomial);
      }
      if (poly.empty()) poly = "0";
      text += fmt::format("  E = {}\n    psi = {}{}\n", format_coefficient(lambda),
                          prefix.empty() ? "" : prefix + " * ", "(" + poly + ")");
      out.push_back({{"mask", ms.mask.str()}, {"eigenvalue", complex_json(lambda)}, {"prefix", prefix}, {"coefficients", coeffs}});
    }
  }
  emit(f.format == "json" ? out.dump(2) + "\n" : text, f.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant-space matrices and algebraic spectra of an elliptic Calogero-Sutherland model"};
  app.require_subcommand(1);

  CommonFlags f;
  SweepFlags sweep_flags;
  VerifyFlags verify_flags;

  auto* matrix = app.add_subcommand("matrix", "Exact operator matrix for one gauge mask");
  add_model_flags(matrix, f);
  add_output_flags(matrix, f);
  matrix->add_option("--mask", f.mask, "Gauge mask: none, 1, 23, 123, ...")->default_str("none");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues for one or all valid masks");
  add_model_flags(spectrum, f);
  add_output_flags(spectrum, f);
  spectrum->add_option("--mask", f.mask, "Gauge mask, or 'all' for every valid mask")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Eigenvalue curves over epsilon or a, as CSV");
  add_model_flags(sweep, f);
  sweep->add_option("--out", f.out, "Write output to FILE instead of stdout");
  sweep->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv"}));
  sweep->add_option("--mask", f.mask, "Gauge mask, or 'all' for every valid mask")->capture_default_str();
  sweep->add_option("--sweep-var", sweep_flags.variable, "Swept variable")
      ->check(CLI::IsMember({"epsilon", "a"}))
      ->capture_default_str();
  sweep->add_option("--range", sweep_flags.range, "lo:hi:steps")->capture_default_str();
  sweep->add_option("--threads", sweep_flags.threads, "Worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks; JSON report on stdout");
  verify->add_option("--only", verify_flags.only, "Run a single check")
      ->check(CLI::IsMember(qes::verify::check_names()));
  verify->add_option("--out", f.out, "Write the report to FILE instead of stdout");
  verify->add_option("--inject-exponent", verify_flags.inject_exponent)->group("");

  auto* masks = app.add_subcommand("masks", "List valid gauge masks with shifted degree and dimension");
  add_model_flags(masks, f);
  masks->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}))->default_str("text");
  masks->add_option("--out", f.out, "Write output to FILE instead of stdout");

  auto* eigenfunctions = app.add_subcommand("eigenfunctions", "Gauge prefix and tau-polynomial of each eigenvector");
  add_model_flags(eigenfunctions, f);
  eigenfunctions->add_option("--mask", f.mask, "Gauge mask, or 'all' for every valid mask")->capture_default_str();
  eigenfunctions->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_str("text");
  eigenfunctions->add_option("--out", f.out, "Write output to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadParams;
  }

  if (matrix->parsed() && f.mask == "all") f.mask = "none";
  if ((masks->parsed() || eigenfunctions->parsed()) && masks->count("--format") + eigenfunctions->count("--format") == 0)
    f.format = "text";

  try {
    if (matrix->parsed()) return cmd_matrix(f);
    if (spectrum->parsed()) return cmd_spectrum(f);
    if (sweep->parsed()) return cmd_sweep(f, sweep_flags);
    if (verify->parsed()) return cmd_verify(f, verify_flags);
    if (masks->parsed()) return cmd_masks(f);
    if (eigenfunctions->parsed()) return cmd_eigenfunctions(f);
  } catch (const qes::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const qes::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const qes::InvalidDegree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const qes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
