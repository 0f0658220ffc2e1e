#include <gtest/gtest.h>

#include <sstream>

#include "qes/error.hpp"
#include "qes/oracles.hpp"
#include "qes/sweep.hpp"

using namespace qes;

namespace {

SweepSpec epsilon_spec(std::size_t steps) {
  SweepSpec spec;
  spec.lo = Rational(0);
  spec.hi = Rational(1);
  spec.steps = steps;
  spec.fixed.n = 2;
  spec.fixed.m = Rational(2);
  return spec;
}

std::string strip_first_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      out += "mask,eig_index,re,im\n";
      continue;
    }
    out += line.substr(line.find(',') + 1) + "\n";
  }
  return out;
}

}  // namespace

TEST(SweepGrid, ExactPoints) {
  SweepSpec spec = epsilon_spec(5);
  const auto grid = sweep_grid(spec);
  ASSERT_EQ(grid.size(), 5u);
  EXPECT_EQ(grid[0], Rational(0));
  EXPECT_EQ(grid[1], Rational(1, 4));
  EXPECT_EQ(grid[4], Rational(1));
  spec.steps = 1;
  EXPECT_EQ(sweep_grid(spec), std::vector<Rational>{Rational(0)});
  spec.steps = 0;
  EXPECT_THROW(sweep_grid(spec), InvalidParams);
  spec.steps = 3;
  spec.hi = Rational(-1);
  EXPECT_THROW(sweep_grid(spec), InvalidParams);
}

TEST(SweepPoint, EpsilonRootsAndCoupling) {
  SweepSpec spec = epsilon_spec(3);
  const ModelParams p = sweep_point(spec, Rational(1, 3));
  EXPECT_EQ(p.roots[0], Rational(2));
  EXPECT_EQ(p.roots[1], Rational(-2, 3));
  EXPECT_EQ(p.roots[2], Rational(-4, 3));
  spec.variable = SweepVariable::a;
  EXPECT_EQ(sweep_point(spec, Rational(5)).a, Rational(5));
}

TEST(Sweep, DegeneratePointMatchesClosedForms) {
  SweepSpec spec = epsilon_spec(1);
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 15u);
  const DegenerateForms f = degenerate_closed_forms(Rational(0));
  std::vector<double> want;
  for (const auto& v : f.six_only) want.push_back(v.to_double());
  for (const auto& v : f.shared_h1) want.push_back(v.to_double());
  std::vector<double> ungauged;
  for (const auto& r : rows)
    if (r.mask == GaugeMask()) ungauged.push_back(r.eigenvalue.real());
  std::sort(want.begin(), want.end());
  ASSERT_EQ(ungauged.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(ungauged[i], want[i], 1e-9);
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  SweepSpec spec = epsilon_spec(7);
  const std::string serial = sweep_csv(run_sweep(spec, 1));
  EXPECT_EQ(serial, sweep_csv(run_sweep(spec, 4)));
  EXPECT_EQ(serial, sweep_csv(run_sweep(spec, 16)));
  spec.variable = SweepVariable::a;
  spec.hi = Rational(5);
  EXPECT_EQ(sweep_csv(run_sweep(spec, 1)), sweep_csv(run_sweep(spec, 3)));
}

TEST(Sweep, SinglePointEqualsSpectrumCsv) {
  SweepSpec spec = epsilon_spec(1);
  spec.lo = Rational(1, 5);
  const std::string sweep = sweep_csv(run_sweep(spec));
  const ModelParams p = sweep_point(spec, spec.lo);
  EXPECT_EQ(strip_first_column(sweep), spectrum_csv(compute_spectra(p, list_valid_masks(p))));
}

TEST(Sweep, CsvHeaderAndRowOrder) {
  SweepSpec spec = epsilon_spec(2);
  spec.masks = std::vector<GaugeMask>{GaugeMask::parse("23")};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].value, Rational(0));
  EXPECT_EQ(rows[3].value, Rational(1));
  EXPECT_EQ(rows[2].index, 2u);
  const std::string csv = sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "sweep_value,mask,eig_index,re,im");
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(56.0), "56");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}
