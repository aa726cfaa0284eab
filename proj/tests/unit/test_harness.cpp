#include <gtest/gtest.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "hamint/harness.hpp"
#include "hamint/reference.hpp"
#include "hamint/systems.hpp"

using namespace hamint;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hamint_test_" + name);
}

ExperimentSpec pendulum_spec(const char* scheme, double h, std::int64_t n) {
  ExperimentSpec spec;
  spec.scheme = parse_scheme(scheme);
  spec.p0 = 1.8;
  spec.h = h;
  spec.n_steps = n;
  return spec;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  EXPECT_EQ(r.ec, std::errc{}) << s;
  return v;
}

}  // namespace

TEST(SchemeIds, ParseAndPrint) {
  for (const char* id : {"gr", "mod-gr", "gr-lex", "gr-slex", "gr-5", "lf", "rk4", "tay-10", "sp-6", "exact-lin"}) {
    EXPECT_EQ(to_string(parse_scheme(id)), id);
  }
  EXPECT_EQ(nominal_order(parse_scheme("gr-7")), 7);
  EXPECT_EQ(nominal_order(parse_scheme("sp-8")), 8);
  EXPECT_TRUE(is_gradient_scheme(parse_scheme("gr-slex")));
  EXPECT_FALSE(is_gradient_scheme(parse_scheme("rk4")));
  EXPECT_THROW(parse_scheme("euler"), UsageError);
  EXPECT_THROW(parse_scheme("tay-0"), UsageError);
  EXPECT_THROW(parse_scheme("tay-17"), UsageError);
  EXPECT_THROW(parse_scheme("sp-3"), UsageError);
  EXPECT_THROW(parse_scheme("gr-x"), UsageError);
}

TEST(Stepper, IncompatiblePairsAreRejected) {
  const HamiltonianSystem cross = make_system("crossterm:0.3");
  EXPECT_THROW(Stepper(parse_scheme("lf"), cross, 0.1), UnsupportedSchemeError);
  EXPECT_THROW(Stepper(parse_scheme("sp-4"), cross, 0.1), UnsupportedSchemeError);
  EXPECT_THROW(Stepper(parse_scheme("exact-lin"), make_system("pendulum"), 0.1), UnsupportedSchemeError);
  EXPECT_THROW(Stepper(parse_scheme("gr"), cross, 0.0), UsageError);
  EXPECT_NO_THROW(Stepper(parse_scheme("gr-slex"), cross, 0.1));
}

TEST(ExperimentSpec, Validation) {
  ExperimentSpec spec = pendulum_spec("gr", 0.1, 10);
  EXPECT_NO_THROW(spec.validate());
  spec.h = -0.1;
  EXPECT_THROW(spec.validate(), UsageError);
  spec = pendulum_spec("gr", 0.1, 0);
  EXPECT_THROW(spec.validate(), UsageError);
  spec = pendulum_spec("gr", 0.1, kDeskScaleSteps + 1);
  EXPECT_THROW(spec.validate(), UsageError);
  spec.allow_long_run = true;
  EXPECT_NO_THROW(spec.validate());
  spec.n_steps = kMaxSteps + 1;
  EXPECT_THROW(spec.validate(), UsageError);
  spec = pendulum_spec("gr", 0.1, 10);
  spec.sample_stride = 0;
  EXPECT_THROW(spec.validate(), UsageError);
}

TEST(Trajectory, SingleStepAndExactTimes) {
  const TrajectoryRecord one = run_trajectory(pendulum_spec("rk4", 0.25, 1));
  ASSERT_EQ(one.samples.size(), 2u);
  EXPECT_EQ(one.samples[1].n, 1);
  EXPECT_EQ(one.samples[1].t, 0.25);
  ExperimentSpec spec = pendulum_spec("gr", 0.1, 95);
  spec.sample_stride = 10;
  const TrajectoryRecord rec = run_trajectory(spec);
  ASSERT_EQ(rec.samples.size(), 11u);  // 0, 10, ..., 90 and the final 95
  for (const Sample& s : rec.samples) EXPECT_EQ(s.t, static_cast<double>(s.n) * 0.1);
  EXPECT_EQ(rec.samples.back().n, 95);
  EXPECT_TRUE(rec.iterations.has_value());
  EXPECT_TRUE(rec.max_global_err.has_value());
}

TEST(Trajectory, IsDeterministic) {
  for (const char* id : {"gr-slex", "tay-5", "sp-4"}) {
    const TrajectoryRecord a = run_trajectory(pendulum_spec(id, 0.25, 500));
    const TrajectoryRecord b = run_trajectory(pendulum_spec(id, 0.25, 500));
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      EXPECT_EQ(std::bit_cast<std::uint64_t>(a.samples[i].x), std::bit_cast<std::uint64_t>(b.samples[i].x));
      EXPECT_EQ(std::bit_cast<std::uint64_t>(a.samples[i].p), std::bit_cast<std::uint64_t>(b.samples[i].p));
    }
    EXPECT_EQ(a.max_abs_energy_err, b.max_abs_energy_err);
  }
}

TEST(Trajectory, ReferenceAvailability) {
  ExperimentSpec spec = pendulum_spec("gr", 0.1, 10);
  EXPECT_TRUE(has_reference_solution(spec));
  spec.x0 = 0.3;
  EXPECT_FALSE(has_reference_solution(spec));
  EXPECT_FALSE(run_trajectory(spec).samples.back().global_err.has_value());
  spec.system = "crossterm:0.4";
  EXPECT_TRUE(has_reference_solution(spec));
}

TEST(Trajectory, SolverFailureCarriesStepIndex) {
  // The locally exact delta resonates once h sqrt(cos x) reaches pi.
  try {
    run_trajectory(pendulum_spec("gr-lex", 3.3, 100));
    FAIL() << "expected TrajectoryAbort";
  } catch (const TrajectoryAbort& e) {
    EXPECT_NE(std::string(e.what()).find("step"), std::string::npos);
  }
}

TEST(Trajectory, GradientFamilyConservesEnergy) {
  for (const char* id : {"gr", "mod-gr", "gr-lex", "gr-slex", "gr-4"}) {
    const TrajectoryRecord r = run_trajectory(pendulum_spec(id, 0.25, 5000));
    EXPECT_LT(r.max_abs_energy_err, 1e-12) << id;
  }
}

TEST(Csv, DoublesRoundTripBitwise) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    double v;
    const std::uint64_t bits = rng();
    std::memcpy(&v, &bits, sizeof v);
    if (!std::isfinite(v)) continue;
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parse_double(format_double(v))), bits) << format_double(v);
  }
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Csv, TrajectoryTableShape) {
  const TrajectoryRecord rec = run_trajectory(pendulum_spec("lf", 0.1, 2));
  const CsvTable t = to_table(rec);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.header.front(), "n");
  const auto path = temp_path("traj.csv");
  emit_csv(rec, path);
  std::ifstream in(path);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 4);
  const CsvTable back = read_csv(path);
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_EQ(parse_double(back.rows[2][1]), 0.2);
  std::filesystem::remove(path);
}

TEST(Csv, EmptyTableIsHeaderOnly) {
  const std::vector<ErrorPoint> none;
  const auto path = temp_path("empty.csv");
  emit_csv(none, path);
  const CsvTable back = read_csv(path);
  EXPECT_FALSE(back.header.empty());
  EXPECT_TRUE(back.rows.empty());
  std::filesystem::remove(path);
}

TEST(Csv, UnwritablePathThrows) {
  EXPECT_THROW(emit_csv(CsvTable{{"a"}, {}}, "/nonexistent-dir/x.csv"), IoError);
  EXPECT_THROW(read_csv("/nonexistent-dir/x.csv"), IoError);
}

TEST(HList, Forms) {
  EXPECT_EQ(parse_h_list("0.2,0.1,0.05"), (std::vector<double>{0.2, 0.1, 0.05}));
  const std::vector<double> g = parse_h_list("0.2:0.025:/2");
  ASSERT_EQ(g.size(), 4u);
  EXPECT_DOUBLE_EQ(g[3], 0.025);
  const std::vector<double> a = parse_h_list("0.1:0.4:0.1");
  ASSERT_EQ(a.size(), 4u);
  EXPECT_NEAR(a[3], 0.4, 1e-15);
  EXPECT_THROW(parse_h_list(""), UsageError);
  EXPECT_THROW(parse_h_list("0.1,abc"), UsageError);
  EXPECT_THROW(parse_h_list("0.1,-0.2"), UsageError);
  EXPECT_THROW(parse_h_list("0.2:0.1:/1"), UsageError);
}

TEST(Errors, GlobalErrorVsH) {
  const double T = pendulum_period(1.8);
  const std::vector<double> hs = {0.1};
  const std::vector<ErrorPoint> pts = global_error_vs_h(parse_scheme("gr-slex"), 1.8, hs, 2.0, {});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].scheme, "gr-slex");
  EXPECT_EQ(pts[0].n_steps, std::llround(2 * T / 0.1));
  EXPECT_LE(std::abs(pts[0].residual_fraction), 0.5);
  EXPECT_GT(pts[0].error, 0.0);
  EXPECT_LT(pts[0].error, 1e-3);
  EXPECT_GT(pts[0].mean_iterations, 0.0);
  const CsvTable t = to_table(pts);
  EXPECT_EQ(t.rows.size(), 1u);
  EXPECT_THROW(global_error_at(parse_scheme("gr"), "rigid-body", 1.0, 0.1, 1.0), UsageError);
}

TEST(Errors, OrderEstimate) {
  const std::vector<double> hs = {0.2, 0.1, 0.05};
  const OrderEstimate lf = estimate_order(parse_scheme("lf"), 1.0, hs, 2 * pendulum_period(1.0));
  EXPECT_NEAR(lf.slope, 2.0, 0.1);
  EXPECT_EQ(lf.pair_slopes.size(), 2u);
  EXPECT_FALSE(lf.floor_only());
  const OrderEstimate ex = estimate_order(parse_scheme("exact-lin"), "harmonic:1", 1.0, hs, 10.0);
  EXPECT_TRUE(ex.floor_only());
  EXPECT_TRUE(std::isnan(ex.slope));
  EXPECT_THROW(estimate_order(parse_scheme("lf"), 1.0, std::vector<double>{0.2, 0.1}, 5.0), UsageError);
}

TEST(Sweep, DeterministicOrderAndFailures) {
  const std::vector<SchemeId> schemes = {parse_scheme("lf"), parse_scheme("gr-lex"), parse_scheme("rk4")};
  const std::vector<double> hs = {3.3, 0.2};
  const double periods = 1.0;
  const std::vector<SweepRow> serial = sweep(schemes, 1.8, hs, periods, 1);
  const std::vector<SweepRow> parallel = sweep(schemes, 1.8, hs, periods, 4);
  ASSERT_EQ(serial.size(), 6u);
  ASSERT_EQ(parallel.size(), 6u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].point.scheme, to_string(schemes[i / 2]));
    EXPECT_EQ(serial[i].point.h, hs[i % 2]);
    EXPECT_EQ(serial[i].failure.has_value(), parallel[i].failure.has_value());
    if (!serial[i].failure) EXPECT_EQ(serial[i].point.error, parallel[i].point.error);
  }
  EXPECT_TRUE(serial[2].failure.has_value());  // gr-lex at h = 3.3 resonates
  EXPECT_FALSE(serial[3].failure.has_value());
  EXPECT_EQ(to_table(std::span<const SweepRow>(serial)).header.back(), "status");
}

TEST(Fits, LoglogAndTrend) {
  const std::vector<double> x = {1, 2, 4, 8};
  const std::vector<double> y = {3, 12, 48, 192};
  EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-14);
  const std::vector<double> tx = {0, 1, 2, 3, 4};
  const std::vector<double> ty = {1.0, 3.1, 4.9, 7.0, 9.0};
  const LinearTrend fit = fit_linear_trend(tx, ty);
  EXPECT_NEAR(fit.slope, 1.99, 1e-12);
  EXPECT_NEAR(fit.intercept, 1.02, 1e-12);
  EXPECT_GT(fit.t_statistic, 50.0);
  EXPECT_THROW(fit_linear_trend(std::vector<double>{0, 1}, std::vector<double>{0, 1}), UsageError);
}

TEST(Plot, Scripts) {
  const auto traj = temp_path("plot_traj.csv");
  const auto errs = temp_path("plot_errs.csv");
  emit_csv(run_trajectory(pendulum_spec("lf", 0.25, 4)), traj);
  const std::vector<double> hs = {0.2};
  emit_csv(global_error_vs_h(parse_scheme("lf"), 1.8, hs, 1.0), errs);

  const std::vector<std::filesystem::path> traj_csvs = {traj};
  const std::string f1 = plotscript(traj_csvs, "fig1");
  EXPECT_NE(f1.find("set datafile separator ','"), std::string::npos);
  EXPECT_NE(f1.find(traj.string()), std::string::npos);
  EXPECT_NE(f1.find("\nunset logscale x\n"), std::string::npos);
  EXPECT_NE(f1.find("\nunset logscale y\n"), std::string::npos);
  const std::vector<std::filesystem::path> err_csvs = {errs};
  const std::string f4 = plotscript(err_csvs, "fig4");
  EXPECT_NE(f4.find("\nset logscale x\n"), std::string::npos);
  EXPECT_NE(f4.find("\nset logscale y\n"), std::string::npos);
  EXPECT_NE(f4.find("lf"), std::string::npos);
  EXPECT_TRUE(is_known_figure("fig6"));
  EXPECT_FALSE(is_known_figure("fig7"));
  EXPECT_THROW(plotscript(traj_csvs, "fig7"), UsageError);
  EXPECT_THROW(plotscript(std::vector<std::filesystem::path>{}, "fig1"), UsageError);
  std::filesystem::remove(traj);
  std::filesystem::remove(errs);
}

// Gradient schemes accumulate round-off linearly; symplectic ones oscillate
// without trend.
TEST(EnergyDrift, TrendOverMillionSteps) {
  auto trend = [](const char* id) {
    ExperimentSpec spec = pendulum_spec(id, 0.25, kDeskScaleSteps);
    spec.sample_stride = 1000;
    spec.observables = kEnergyError;
    const TrajectoryRecord rec = run_trajectory(spec);
    std::vector<double> t, e;
    for (const Sample& s : rec.samples) {
      t.push_back(s.t);
      e.push_back(std::abs(s.energy_err));
    }
    return fit_linear_trend(t, e);
  };
  for (const char* id : {"gr", "mod-gr", "gr-lex", "gr-slex", "gr-3", "tay-10"}) {
    const LinearTrend fit = trend(id);
    EXPECT_GT(fit.slope, 0.0) << id;
    EXPECT_GT(fit.t_statistic, 3.0) << id;
  }
  for (const char* id : {"lf", "sp-4"}) {
    EXPECT_LT(std::abs(trend(id).t_statistic), 3.0) << id;
  }
}
