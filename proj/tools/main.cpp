// hamint: command-line front end to the integration harness.
//
//   hamint integrate --scheme gr-lex --system pendulum --p0 1.8 --h 0.25 --steps 100000 --stride 100 --out run.csv
//   hamint sweep --schemes gr,gr-3,gr-7,gr-lex,sp-4,tay-10 --p0 0.02 --h 0.4:0.0125:/2 --periods 120 --out fig4.csv
//   hamint order --scheme gr-slex --p0 1.8 --h 0.2,0.1,0.05,0.025 --t 18.24
//   hamint plot --figure fig4 --csv fig4.csv --out fig4.gp
//
// Exit status: 0 success, 2 usage, 3 solver non-convergence, 4 precision floor only.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hamint/errors.hpp"
#include "hamint/harness.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kNonConvergence = 3,
  kPrecisionFloor = 4,
};

struct SolverFlags {
  double tol = 1e-15;
  int max_iter = 100;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--tol", tol, "fixed-point increment tolerance")->capture_default_str();
    cmd.add_option("--max-iter", max_iter, "fixed-point iteration cap")->capture_default_str();
  }
  hamint::SolverConfig config() const {
    hamint::SolverConfig cfg;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    return cfg;
  }
};

std::vector<hamint::SchemeId> parse_scheme_list(const std::string& text) {
  std::vector<hamint::SchemeId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(hamint::parse_scheme(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_table(const hamint::CsvTable& table, const std::string& out) {
  if (out.empty() || out == "-") {
    for (std::size_t i = 0; i < table.header.size(); ++i) std::cout << (i ? "," : "") << table.header[i];
    std::cout << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << '\n';
    }
  } else {
    hamint::emit_csv(table, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-preserving and reference integrators for one-degree-of-freedom Hamiltonians"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  // integrate
  auto* integrate = app.add_subcommand("integrate", "integrate one trajectory and write its samples");
  std::string scheme = "gr";
  std::string system = "pendulum";
  double p0 = 1.8, x0 = 0.0, h = 0.25;
  std::int64_t steps = 1000, stride = 1;
  bool long_run = false;
  std::string out;
  SolverFlags integrate_solver;
  integrate->add_option("--scheme", scheme, "scheme id")->capture_default_str();
  integrate->add_option("--system", system, "pendulum, harmonic:omega or crossterm:alpha")->capture_default_str();
  integrate->add_option("--p0", p0, "initial momentum")->capture_default_str();
  integrate->add_option("--x0", x0, "initial position")->capture_default_str();
  integrate->add_option("--h", h, "step size")->capture_default_str();
  integrate->add_option("--steps", steps, "number of steps")->capture_default_str();
  integrate->add_option("--stride", stride, "record every k-th step")->capture_default_str();
  integrate->add_flag("--long-run", long_run, "allow more than 1e6 steps (up to 1e8)");
  integrate->add_option("--out", out, "output CSV (stdout if omitted)");
  integrate_solver.add_to(*integrate);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "pendulum global error against h at a multiple of the period");
  std::string schemes = "gr";
  std::string sweep_h = "0.4:0.0125:/2";
  double sweep_p0 = 0.02, periods = 120.0;
  unsigned threads = 0;
  std::string sweep_out;
  SolverFlags sweep_solver;
  sweep_cmd->add_option("--schemes", schemes, "comma-separated scheme ids")->capture_default_str();
  sweep_cmd->add_option("--p0", sweep_p0, "initial momentum")->capture_default_str();
  sweep_cmd->add_option("--h", sweep_h, "a,b,c or start:stop:/ratio or start:stop:step")->capture_default_str();
  sweep_cmd->add_option("--periods", periods, "target time in periods")->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "worker threads (0: all cores)")->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "output CSV (stdout if omitted)");
  sweep_solver.add_to(*sweep_cmd);

  // order
  auto* order_cmd = app.add_subcommand("order", "empirical convergence order from a log-log fit");
  std::string order_scheme = "gr";
  std::string order_system = "pendulum";
  std::string order_h = "0.2,0.1,0.05,0.025";
  double order_p0 = 1.8, t_final = 18.24;
  std::string order_out;
  SolverFlags order_solver;
  order_cmd->add_option("--scheme", order_scheme, "scheme id")->capture_default_str();
  order_cmd->add_option("--system", order_system, "system with a known exact solution")->capture_default_str();
  order_cmd->add_option("--p0", order_p0, "initial momentum")->capture_default_str();
  order_cmd->add_option("--h", order_h, "at least three step sizes")->capture_default_str();
  order_cmd->add_option("--t", t_final, "final time")->capture_default_str();
  order_cmd->add_option("--out", order_out, "optional CSV of the error table");
  order_solver.add_to(*order_cmd);

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "write a gnuplot script for one figure");
  std::string figure;
  std::vector<std::string> csvs;
  std::string plot_out;
  plot_cmd->add_option("--figure", figure, "fig1 .. fig6")->required();
  plot_cmd->add_option("--csv", csvs, "input CSV files");
  plot_cmd->add_option("--out", plot_out, "output script (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*integrate) {
      hamint::ExperimentSpec spec;
      spec.scheme = hamint::parse_scheme(scheme);
      spec.system = system;
      spec.p0 = p0;
      spec.x0 = x0;
      spec.h = h;
      spec.n_steps = steps;
      spec.sample_stride = stride;
      spec.allow_long_run = long_run;
      spec.solver = integrate_solver.config();
      const hamint::TrajectoryRecord rec = hamint::run_trajectory(spec);
      write_table(hamint::to_table(rec), out);
      std::fprintf(stderr, "%s on %s: %lld steps in %.3f s, max |dE| = %.3e", scheme.c_str(), system.c_str(),
                   static_cast<long long>(steps), rec.wall_seconds, rec.max_abs_energy_err);
      if (rec.max_global_err) std::fprintf(stderr, ", max global error = %.3e", *rec.max_global_err);
      if (rec.iterations) {
        std::fprintf(stderr, ", iterations min/mean/max = %d/%.2f/%d", rec.iterations->min, rec.iterations->mean,
                     rec.iterations->max);
      }
      std::fprintf(stderr, "\n");
      return kOk;
    }
    if (*sweep_cmd) {
      const auto ids = parse_scheme_list(schemes);
      const auto hs = hamint::parse_h_list(sweep_h);
      const auto rows = hamint::sweep(ids, sweep_p0, hs, periods, threads, sweep_solver.config());
      write_table(hamint::to_table(std::span<const hamint::SweepRow>(rows)), sweep_out);
      int failures = 0;
      for (const auto& r : rows) {
        if (r.failure) {
          ++failures;
          std::fprintf(stderr, "%s h=%g: %s\n", r.point.scheme.c_str(), r.point.h, r.failure->c_str());
        }
      }
      return failures ? kNonConvergence : kOk;
    }
    if (*order_cmd) {
      const auto hs = hamint::parse_h_list(order_h);
      const auto est = hamint::estimate_order(hamint::parse_scheme(order_scheme), order_system, order_p0, hs,
                                              t_final, order_solver.config());
      if (!order_out.empty()) hamint::emit_csv(est.points, order_out);
      std::printf("h,n_steps,t_reached,error\n");
      for (const auto& pt : est.points) {
        std::printf("%s,%lld,%s,%s\n", hamint::format_double(pt.h).c_str(), static_cast<long long>(pt.n_steps),
                    hamint::format_double(pt.t_reached).c_str(), hamint::format_double(pt.error).c_str());
      }
      for (const auto& w : est.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
      if (est.floor_only()) {
        std::printf("slope = nan (precision floor)\n");
        return kPrecisionFloor;
      }
      std::printf("slope = %.4f\npair slopes =", est.slope);
      for (double s : est.pair_slopes) std::printf(" %.4f", s);
      std::printf("\n");
      return kOk;
    }
    if (*plot_cmd) {
      std::vector<std::filesystem::path> paths(csvs.begin(), csvs.end());
      if (plot_out.empty() || plot_out == "-") {
        std::cout << hamint::plotscript(paths, figure);
      } else {
        hamint::emit_plotscript(paths, figure, plot_out);
      }
      return kOk;
    }
  } catch (const hamint::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const hamint::TrajectoryAbort& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kNonConvergence;
  } catch (const hamint::NonConvergenceError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kNonConvergence;
  } catch (const hamint::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailure;
  }
  return kUsage;
}
