#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamint/gradient_schemes.hpp"
#include "hamint/scheme.hpp"

namespace hamint {

enum Observable : unsigned {
  kEnergyError = 1u << 0,
  kGlobalError = 1u << 1,
  kState = 1u << 2,
  kAllObservables = kEnergyError | kGlobalError | kState,
};

/// Runs longer than this need ExperimentSpec::allow_long_run.
inline constexpr std::int64_t kDeskScaleSteps = 1'000'000;
inline constexpr std::int64_t kMaxSteps = 100'000'000;

struct ExperimentSpec {
  SchemeId scheme;
  std::string system = "pendulum";
  double p0 = 0.0;
  double x0 = 0.0;
  double h = 0.0;
  std::int64_t n_steps = 1;
  std::int64_t sample_stride = 1;
  unsigned observables = kAllObservables;
  SolverConfig solver;
  bool allow_long_run = false;

  /// Throws UsageError on h <= 0, n_steps outside [1, 1e8], stride < 1.
  void validate() const;
};

struct Sample {
  std::int64_t n = 0;
  double t = 0.0;  // exactly n * h
  double x = 0.0;
  double p = 0.0;
  double energy = 0.0;
  double energy_err = 0.0;  // H(s_n) - H(s_0)
  std::optional<double> global_err;  // max(|dx|, |dp|)
  std::optional<double> global_err_x;
  std::optional<double> global_err_p;
};

struct IterationStats {
  int min = 0;
  int max = 0;
  double mean = 0.0;
};

struct TrajectoryRecord {
  ExperimentSpec spec;
  double initial_energy = 0.0;
  std::vector<Sample> samples;
  /// Largest |energy_err| over every step, sampled or not.
  double max_abs_energy_err = 0.0;
  /// Largest global error over every sample.
  std::optional<double> max_global_err;
  double wall_seconds = 0.0;
  std::optional<IterationStats> iterations;  // implicit schemes only
};

/// Whether an exact solution is available for the system and initial state.
bool has_reference_solution(const ExperimentSpec& spec);

/// Samples s_0, every sample_stride-th state and the final state.
/// Solver failures surface as TrajectoryAbort carrying the step index.
TrajectoryRecord run_trajectory(const ExperimentSpec& spec);

struct ErrorPoint {
  std::string scheme;
  double h = 0.0;
  std::int64_t n_steps = 0;
  double t_target = 0.0;
  double t_reached = 0.0;
  /// (t_target - n h) / h, in [-1/2, 1/2].
  double residual_fraction = 0.0;
  double error = 0.0;
  double error_x = 0.0;
  double error_p = 0.0;
  double max_abs_energy_err = 0.0;
  double mean_iterations = 0.0;
};

/// Global error at t ~ t_target, n = round(t_target / h), compared against the
/// exact solution at n h.
ErrorPoint global_error_at(const SchemeId& scheme, std::string_view system, double p0, double h,
                           double t_target, const SolverConfig& cfg = {});

/// Pendulum global error at t ~ n_periods T(p0) for each h.
std::vector<ErrorPoint> global_error_vs_h(const SchemeId& scheme, double p0, std::span<const double> h_list,
                                          double n_periods, const SolverConfig& cfg = {});

struct SweepRow {
  ErrorPoint point;
  std::optional<std::string> failure;  // set when the run aborted
};

/// Every (scheme, h) pair, in parallel, merged in scheme-major input order.
/// threads = 0 picks the hardware concurrency.
std::vector<SweepRow> sweep(std::span<const SchemeId> schemes, double p0, std::span<const double> h_list,
                            double n_periods, unsigned threads = 0, const SolverConfig& cfg = {});

/// Errors below this are treated as round-off and left out of order fits.
inline constexpr double kPrecisionFloor = 1e2 * 2.220446049250313e-16;

struct OrderEstimate {
  double slope = 0.0;  // NaN when fewer than two points survive
  std::vector<double> pair_slopes;  // between consecutive surviving points
  std::vector<ErrorPoint> points;
  std::vector<bool> excluded;
  std::vector<std::string> warnings;

  bool floor_only() const;
};

/// Least-squares slope of log error against log h. Needs at least three h.
OrderEstimate estimate_order(const SchemeId& scheme, std::string_view system, double p0,
                             std::span<const double> h_list, double t_final, const SolverConfig& cfg = {});
OrderEstimate estimate_order(const SchemeId& scheme, double p0, std::span<const double> h_list, double t_final,
                             const SolverConfig& cfg = {});

/// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct LinearTrend {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double t_statistic = 0.0;  // slope / stderr
};

/// Ordinary least-squares line through (x_i, y_i); needs three points.
LinearTrend fit_linear_trend(std::span<const double> x, std::span<const double> y);

/// "a,b,c" or "start:stop:/ratio" (geometric) or "start:stop:step".
std::vector<double> parse_h_list(std::string_view text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// 17 significant digits (round-trip exact); "nan" for NaN.
std::string format_double(double v);

CsvTable to_table(const TrajectoryRecord& record);
CsvTable to_table(std::span<const ErrorPoint> points);
CsvTable to_table(std::span<const SweepRow> rows);

/// Writes the table; throws IoError naming the path.
void emit_csv(const CsvTable& table, const std::filesystem::path& path);
void emit_csv(const TrajectoryRecord& record, const std::filesystem::path& path);
void emit_csv(std::span<const ErrorPoint> points, const std::filesystem::path& path);

CsvTable read_csv(const std::filesystem::path& path);

/// Figure ids fig1 .. fig6.
bool is_known_figure(std::string_view figure);

/// gnuplot script laying out the chosen figure from existing CSV files.
std::string plotscript(std::span<const std::filesystem::path> csv_paths, std::string_view figure);
void emit_plotscript(std::span<const std::filesystem::path> csv_paths, std::string_view figure,
                     const std::filesystem::path& path);

}  // namespace hamint
