#include "hamint/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "hamint/errors.hpp"
#include "hamint/exactlin.hpp"
#include "hamint/reference.hpp"
#include "hamint/systems.hpp"

namespace hamint {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using ReferenceFn = std::function<PhaseState(std::int64_t n)>;

// Exact solution sampled at t = n h, when one is known.
std::optional<ReferenceFn> make_reference(const HamiltonianSystem& sys, const ExperimentSpec& spec) {
  const PhaseState s0{spec.x0, spec.p0, 0.0};
  if (sys.name() == "pendulum") {
    if (spec.x0 != 0.0) return std::nullopt;
    const PendulumOrbit orbit = pendulum_orbit(spec.p0);
    const double h = spec.h;
    return ReferenceFn([orbit, h](std::int64_t n) { return pendulum_exact_at_step(orbit, n, h); });
  }
  if (sys.is_quadratic()) {
    // The linearization of a quadratic H is the system itself.
    const LinearSystem lin = linearize(sys, s0);
    const double h = spec.h;
    return ReferenceFn([lin, s0, h](std::int64_t n) {
      const double t = static_cast<double>(n) * h;
      const AffineStepMap map = exact_step_map(lin, t);
      return PhaseState{s0.x + map.w.x(), s0.p + map.w.y(), t};
    });
  }
  return std::nullopt;
}

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string opt_cell(const std::optional<double>& v) { return format_double(v.value_or(kNaN)); }

}  // namespace

void ExperimentSpec::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("h must be positive and finite");
  if (n_steps < 1) throw UsageError("n_steps must be at least 1");
  if (n_steps > kMaxSteps) throw UsageError("n_steps above 1e8 is not supported");
  if (n_steps > kDeskScaleSteps && !allow_long_run) {
    throw UsageError("runs beyond 1e6 steps need the explicit long-run opt-in");
  }
  if (sample_stride < 1) throw UsageError("sample_stride must be at least 1");
  if (!std::isfinite(p0) || !std::isfinite(x0)) throw UsageError("initial state must be finite");
  solver.validate();
}

bool has_reference_solution(const ExperimentSpec& spec) {
  const HamiltonianSystem sys = make_system(spec.system);
  return make_reference(sys, spec).has_value();
}

TrajectoryRecord run_trajectory(const ExperimentSpec& spec) {
  spec.validate();
  const HamiltonianSystem sys = make_system(spec.system);
  Stepper stepper(spec.scheme, sys, spec.h, spec.solver);
  const bool want_energy = (spec.observables & kEnergyError) != 0;
  std::optional<ReferenceFn> reference;
  if (spec.observables & kGlobalError) reference = make_reference(sys, spec);

  TrajectoryRecord rec;
  rec.spec = spec;
  PhaseState s{spec.x0, spec.p0, 0.0};
  rec.initial_energy = eval_energy(sys, s);
  const double e0 = rec.initial_energy;

  auto record = [&](std::int64_t n, const PhaseState& state, double energy) {
    Sample smp;
    smp.n = n;
    smp.t = static_cast<double>(n) * spec.h;
    smp.x = state.x;
    smp.p = state.p;
    smp.energy = want_energy ? energy : kNaN;
    smp.energy_err = want_energy ? energy - e0 : kNaN;
    if (reference) {
      const PhaseState ex = (*reference)(n);
      const double dx = std::abs(state.x - ex.x);
      const double dp = std::abs(state.p - ex.p);
      smp.global_err_x = dx;
      smp.global_err_p = dp;
      smp.global_err = std::max(dx, dp);
      if (std::isnan(dx) || std::isnan(dp)) smp.global_err = kNaN;
      rec.max_global_err = std::max(rec.max_global_err.value_or(0.0), *smp.global_err);
    }
    rec.samples.push_back(smp);
  };

  const auto started = std::chrono::steady_clock::now();
  record(0, s, e0);
  const bool implicit = is_gradient_scheme(spec.scheme);
  std::int64_t iter_total = 0;
  IterationStats stats{std::numeric_limits<int>::max(), 0, 0.0};

  for (std::int64_t n = 1; n <= spec.n_steps; ++n) {
    try {
      s = stepper.step(s);
    } catch (const NonConvergenceError& e) {
      throw TrajectoryAbort(std::string(e.what()) + " at step " + std::to_string(n), n);
    } catch (const ResonanceError& e) {
      throw TrajectoryAbort(std::string(e.what()) + " at step " + std::to_string(n), n);
    }
    if (!std::isfinite(s.x) || !std::isfinite(s.p)) {
      throw TrajectoryAbort("state became non-finite at step " + std::to_string(n), n);
    }
    if (implicit) {
      const int it = stepper.last_iterations();
      iter_total += it;
      stats.min = std::min(stats.min, it);
      stats.max = std::max(stats.max, it);
    }
    double energy = kNaN;
    if (want_energy) {
      energy = eval_energy(sys, s);
      rec.max_abs_energy_err = std::max(rec.max_abs_energy_err, std::abs(energy - e0));
    }
    if (n % spec.sample_stride == 0 || n == spec.n_steps) record(n, s, energy);
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (implicit) {
    stats.mean = static_cast<double>(iter_total) / static_cast<double>(spec.n_steps);
    rec.iterations = stats;
  }
  return rec;
}

ErrorPoint global_error_at(const SchemeId& scheme, std::string_view system, double p0, double h, double t_target,
                           const SolverConfig& cfg) {
  if (!(h > 0.0)) throw UsageError("h must be positive");
  if (!(t_target > 0.0) || !std::isfinite(t_target)) throw UsageError("target time must be positive");
  const double steps = std::round(t_target / h);
  if (steps > static_cast<double>(kMaxSteps)) throw UsageError("target time needs more than 1e8 steps");
  ExperimentSpec spec;
  spec.scheme = scheme;
  spec.system = std::string(system);
  spec.p0 = p0;
  spec.h = h;
  spec.n_steps = std::max<std::int64_t>(1, static_cast<std::int64_t>(steps));
  spec.sample_stride = spec.n_steps;
  spec.observables = kEnergyError | kGlobalError;
  spec.solver = cfg;
  spec.allow_long_run = true;
  if (!has_reference_solution(spec)) {
    throw UsageError("no exact solution available for system '" + spec.system + "'");
  }
  const TrajectoryRecord rec = run_trajectory(spec);
  const Sample& last = rec.samples.back();
  ErrorPoint pt;
  pt.scheme = to_string(scheme);
  pt.h = h;
  pt.n_steps = spec.n_steps;
  pt.t_target = t_target;
  pt.t_reached = last.t;
  pt.residual_fraction = (t_target - last.t) / h;
  pt.error = last.global_err.value_or(kNaN);
  pt.error_x = last.global_err_x.value_or(kNaN);
  pt.error_p = last.global_err_p.value_or(kNaN);
  pt.max_abs_energy_err = rec.max_abs_energy_err;
  pt.mean_iterations = rec.iterations ? rec.iterations->mean : 0.0;
  return pt;
}

std::vector<ErrorPoint> global_error_vs_h(const SchemeId& scheme, double p0, std::span<const double> h_list,
                                          double n_periods, const SolverConfig& cfg) {
  if (h_list.empty()) throw UsageError("h list is empty");
  if (!(n_periods > 0.0)) throw UsageError("number of periods must be positive");
  const double t_target = n_periods * pendulum_period(p0);
  std::vector<ErrorPoint> out;
  out.reserve(h_list.size());
  for (double h : h_list) out.push_back(global_error_at(scheme, "pendulum", p0, h, t_target, cfg));
  return out;
}

std::vector<SweepRow> sweep(std::span<const SchemeId> schemes, double p0, std::span<const double> h_list,
                            double n_periods, unsigned threads, const SolverConfig& cfg) {
  if (schemes.empty()) throw UsageError("scheme list is empty");
  if (h_list.empty()) throw UsageError("h list is empty");
  if (!(n_periods > 0.0)) throw UsageError("number of periods must be positive");
  const double t_target = n_periods * pendulum_period(p0);
  // Surface incompatible scheme ids before spawning anything.
  const HamiltonianSystem pend = pendulum();
  for (const SchemeId& id : schemes) Stepper probe(id, pend, h_list.front(), cfg);

  const std::size_t total = schemes.size() * h_list.size();
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr fatal;
  std::mutex fatal_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const SchemeId& id = schemes[i / h_list.size()];
      const double h = h_list[i % h_list.size()];
      try {
        rows[i].point = global_error_at(id, "pendulum", p0, h, t_target, cfg);
      } catch (const TrajectoryAbort& e) {
        ErrorPoint pt;
        pt.scheme = to_string(id);
        pt.h = h;
        pt.t_target = t_target;
        pt.error = pt.error_x = pt.error_p = kNaN;
        rows[i].point = pt;
        rows[i].failure = e.what();
      } catch (...) {
        std::lock_guard lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
      }
    }
  };
  unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, total));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);
  return rows;
}

bool OrderEstimate::floor_only() const { return std::isnan(slope); }

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw UsageError("log-log fit needs at least two paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (sxx == 0.0) throw UsageError("log-log fit needs distinct abscissae");
  return sxy / sxx;
}

OrderEstimate estimate_order(const SchemeId& scheme, std::string_view system, double p0,
                             std::span<const double> h_list, double t_final, const SolverConfig& cfg) {
  if (h_list.size() < 3) throw UsageError("order estimation needs at least three step sizes");
  OrderEstimate est;
  std::vector<double> hs, errs;
  for (double h : h_list) {
    ErrorPoint pt = global_error_at(scheme, system, p0, h, t_final, cfg);
    const bool floor = !(pt.error >= kPrecisionFloor) || !std::isfinite(pt.error);
    if (floor) {
      est.warnings.push_back("h = " + format_double(h) + ": error " + format_double(pt.error) +
                             " is at the precision floor; point excluded");
    } else {
      hs.push_back(h);
      errs.push_back(pt.error);
    }
    est.excluded.push_back(floor);
    est.points.push_back(std::move(pt));
  }
  if (hs.size() < 2) {
    est.slope = kNaN;
    est.warnings.push_back("fewer than two points above the precision floor; no slope");
    return est;
  }
  est.slope = loglog_slope(hs, errs);
  for (std::size_t i = 1; i < hs.size(); ++i) {
    est.pair_slopes.push_back(std::log(errs[i] / errs[i - 1]) / std::log(hs[i] / hs[i - 1]));
  }
  return est;
}

OrderEstimate estimate_order(const SchemeId& scheme, double p0, std::span<const double> h_list, double t_final,
                             const SolverConfig& cfg) {
  return estimate_order(scheme, "pendulum", p0, h_list, t_final, cfg);
}

LinearTrend fit_linear_trend(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) throw UsageError("trend fit needs at least three paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw UsageError("trend fit needs distinct abscissae");
  LinearTrend tr;
  tr.slope = sxy / sxx;
  tr.intercept = my - tr.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (tr.intercept + tr.slope * x[i]);
    sse += r * r;
  }
  tr.slope_stderr = std::sqrt(sse / (n - 2.0) / sxx);
  tr.t_statistic = tr.slope_stderr > 0.0 ? tr.slope / tr.slope_stderr
                                         : (tr.slope == 0.0 ? 0.0 : std::copysign(INFINITY, tr.slope));
  return tr;
}

std::vector<double> parse_h_list(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("range must be start:stop:step or start:stop:/ratio");
    const double start = parse_real(parts[0], "range start");
    const double stop = parse_real(parts[1], "range stop");
    const std::string_view third = parts[2];
    const double slack = 1e-9 * std::max(std::abs(start), std::abs(stop));
    if (!third.empty() && third.front() == '/') {
      const double ratio = parse_real(third.substr(1), "range ratio");
      if (!(ratio > 1.0) || !(start > 0.0) || !(stop > 0.0) || stop > start) {
        throw UsageError("geometric range needs start >= stop > 0 and ratio > 1");
      }
      for (double v = start; v >= stop - slack; v /= ratio) out.push_back(v);
    } else {
      const double step = parse_real(third, "range step");
      if (step == 0.0 || (stop - start) * step < 0.0) throw UsageError("range step points away from stop");
      const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
      if (count > 100000) throw UsageError("range has too many entries");
      for (std::int64_t k = 0; k <= count; ++k) out.push_back(start + static_cast<double>(k) * step);
    }
  } else {
    for (std::string_view item : split(text, ',')) out.push_back(parse_real(item, "step size"));
  }
  for (double h : out) {
    if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("step sizes must be positive and finite");
  }
  if (out.empty()) throw UsageError("empty step-size list");
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

CsvTable to_table(const TrajectoryRecord& record) {
  CsvTable t;
  t.header = {"n", "t", "x", "p", "energy", "energy_err", "global_err", "global_err_x", "global_err_p"};
  t.rows.reserve(record.samples.size());
  for (const Sample& s : record.samples) {
    t.rows.push_back({std::to_string(s.n), format_double(s.t), format_double(s.x), format_double(s.p),
                      format_double(s.energy), format_double(s.energy_err), opt_cell(s.global_err),
                      opt_cell(s.global_err_x), opt_cell(s.global_err_p)});
  }
  return t;
}

namespace {

std::vector<std::string> error_row(const ErrorPoint& p) {
  return {p.scheme,          format_double(p.h),       std::to_string(p.n_steps),
          format_double(p.t_target), format_double(p.t_reached), format_double(p.residual_fraction),
          format_double(p.error),    format_double(p.error_x),   format_double(p.error_p),
          format_double(p.max_abs_energy_err), format_double(p.mean_iterations)};
}

const std::vector<std::string> kErrorHeader = {
    "scheme", "h", "n_steps", "t_target", "t_reached", "residual_fraction",
    "error",  "error_x", "error_p", "max_abs_energy_err", "mean_iterations"};

}  // namespace

CsvTable to_table(std::span<const ErrorPoint> points) {
  CsvTable t;
  t.header = kErrorHeader;
  for (const ErrorPoint& p : points) t.rows.push_back(error_row(p));
  return t;
}

CsvTable to_table(std::span<const SweepRow> rows) {
  CsvTable t;
  t.header = kErrorHeader;
  t.header.push_back("status");
  for (const SweepRow& r : rows) {
    auto row = error_row(r.point);
    std::string status = r.failure.value_or("ok");
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    row.push_back(std::move(status));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  auto write_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void emit_csv(const TrajectoryRecord& record, const std::filesystem::path& path) {
  emit_csv(to_table(record), path);
}

void emit_csv(std::span<const ErrorPoint> points, const std::filesystem::path& path) {
  emit_csv(to_table(points), path);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    for (std::string_view c : split(line, ',')) cells.emplace_back(c);
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  if (first) throw IoError("'" + path.string() + "' has no header row");
  return t;
}

namespace {

struct FigureLayout {
  const char* title;
  const char* xlabel;
  const char* ylabel;
  bool log_x;
  bool log_y;
  bool per_scheme;  // error-vs-h tables split by the scheme column
  const char* x_column;
  const char* y_column;
  const char* y_expr;   // gnuplot expression of the y column, %d for its index
};

std::optional<FigureLayout> figure_layout(std::string_view figure) {
  if (figure == "fig1") return FigureLayout{"Energy as a function of time", "t", "E", false, false, false, "t", "energy", "$%d"};
  if (figure == "fig2") return FigureLayout{"Energy of discrete gradient schemes", "t", "E", false, false, false, "t", "energy", "$%d"};
  if (figure == "fig3") return FigureLayout{"Energy error as a function of time", "t", "|E - E_0|", false, true, false, "t", "energy_err", "abs($%d)"};
  if (figure == "fig4") return FigureLayout{"Global error as a function of h", "h", "global error", true, true, true, "h", "error", "$%d"};
  if (figure == "fig5") return FigureLayout{"Global error as a function of h", "h", "global error", true, true, true, "h", "error", "$%d"};
  if (figure == "fig6") return FigureLayout{"Global error as a function of time", "t", "global error", true, true, false, "t", "global_err", "$%d"};
  return std::nullopt;
}

int column_of(const CsvTable& t, std::string_view name, const std::filesystem::path& path) {
  const auto it = std::find(t.header.begin(), t.header.end(), name);
  if (it == t.header.end()) {
    throw UsageError("'" + path.string() + "' has no column '" + std::string(name) + "'");
  }
  return static_cast<int>(it - t.header.begin()) + 1;
}

std::string quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  return out + "'";
}

std::string y_using(const char* expr, int col) {
  std::string s(expr);
  const auto pos = s.find("%d");
  s.replace(pos, 2, std::to_string(col));
  return "(" + s + ")";
}

}  // namespace

bool is_known_figure(std::string_view figure) { return figure_layout(figure).has_value(); }

std::string plotscript(std::span<const std::filesystem::path> csv_paths, std::string_view figure) {
  const auto layout = figure_layout(figure);
  if (!layout) throw UsageError("unknown figure '" + std::string(figure) + "' (expected fig1 .. fig6)");
  if (csv_paths.empty()) throw UsageError("plot needs at least one CSV file");

  std::ostringstream gp;
  gp << "# gnuplot script, " << figure << "\n";
  gp << "set datafile separator ','\n";
  gp << "set terminal pngcairo size 900,600\n";
  gp << "set output " << quote(std::string(figure) + ".png") << "\n";
  gp << "set title " << quote(layout->title) << "\n";
  gp << "set xlabel " << quote(layout->xlabel) << "\n";
  gp << "set ylabel " << quote(layout->ylabel) << "\n";
  gp << "set key outside right\n";
  gp << "set grid\n";
  gp << (layout->log_x ? "set logscale x\n" : "unset logscale x\n");
  gp << (layout->log_y ? "set logscale y\nset format y '10^{%L}'\n" : "unset logscale y\n");

  std::vector<std::string> series;
  for (const auto& path : csv_paths) {
    const CsvTable table = read_csv(path);
    const int xc = column_of(table, layout->x_column, path);
    const int yc = column_of(table, layout->y_column, path);
    const std::string y = y_using(layout->y_expr, yc);
    if (layout->per_scheme) {
      const int sc = column_of(table, "scheme", path);
      std::vector<std::string> order;
      std::set<std::string> seen;
      for (const auto& row : table.rows) {
        if (static_cast<int>(row.size()) >= sc && seen.insert(row[sc - 1]).second) order.push_back(row[sc - 1]);
      }
      for (const auto& id : order) {
        series.push_back(quote(path.string()) + " every ::1 using (strcol(" + std::to_string(sc) + ") eq " +
                         quote(id) + " ? $" + std::to_string(xc) + " : 1/0):" + y +
                         " with linespoints title " + quote(id));
      }
    } else {
      series.push_back(quote(path.string()) + " every ::1 using " + std::to_string(xc) + ":" + y +
                       " with lines title " + quote(path.stem().string()));
    }
  }
  gp << "plot ";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) gp << ", \\\n     ";
    gp << series[i];
  }
  gp << "\n";
  return gp.str();
}

void emit_plotscript(std::span<const std::filesystem::path> csv_paths, std::string_view figure,
                     const std::filesystem::path& path) {
  const std::string script = plotscript(csv_paths, figure);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << script;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace hamint
