#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "gkdv/harness.hpp"

namespace gkdv {

namespace {

constexpr long kResonanceBudget = 20'000'000;
constexpr double kDriftTolerance = 1e-6;
constexpr double kGradientSlack = 1e-9;
constexpr double kSolitonTolerance = 1e-5;
constexpr double kSweepSlope = -1.5;
constexpr double kGrowthTolerance = 0.5;

std::string now_iso() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(double v) { return format_real(v); }

void require(bool ok, const std::string& scenario, const std::string& what) {
  if (!ok) throw std::invalid_argument(scenario + ": " + what);
}

SimulateOptions options_from(const SimConfig& c) {
  SimulateOptions o;
  o.t_final = c.t_final;
  o.record_every = c.record_every;
  o.s_track = c.s_track;
  o.dt_override = c.dt_override;
  return o;
}

struct Context {
  const SimConfig& config;
  RunReport& report;
  std::filesystem::path dir;

  void check(std::string name, std::string invariant, bool passed, std::string detail) {
    report.assertions.push_back({std::move(name), std::move(invariant), passed, std::move(detail)});
  }
  void file(const std::filesystem::path& p) { report.files.push_back(p.string()); }
};

double max_relative_drift(const std::vector<double>& v, double floor) {
  const double scale = std::max(std::abs(v.front()), floor);
  double d = 0.0;
  for (double x : v) d = std::max(d, std::abs(x - v.front()) / scale);
  return d;
}

void check_run(Context& ctx, const SimulationResult& run) {
  ctx.report.under_resolved = run.under_resolved;
  ctx.check("completed", "the run reaches t_final without integration failure or blow-up",
            run.status == RunStatus::completed, to_string(run.status) + (run.message.empty() ? "" : ": " + run.message));
  ctx.check("resolved", "spectral tail of the top 10% of modes stays below 1e-8 of the L2 mass", !run.under_resolved,
            "max tail fraction " + fmt(run.max_tail_l2));
}

void check_defocusing_bound(Context& ctx, const InvariantSeries& s) {
  double excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i) excess = std::max(excess, s.grad_l2[i] * s.grad_l2[i] - 2.0 * s.energy.front());
  ctx.check("defocusing-gradient-bound", "|u_x(t)|^2 <= 2 E(u0) + 1e-9 for the defocusing even-power flow",
            excess <= kGradientSlack, "max |u_x|^2 - 2 E(u0) = " + fmt(excess));
}

SimulationResult run_and_save(Context& ctx, const Field& initial, const SimulateOptions& o) {
  auto run = simulate(initial, ctx.config.model(), o);
  write_series_csv(ctx.dir / "series.csv", run.series);
  ctx.file(ctx.dir / "series.csv");
  write_checkpoint((ctx.dir / "final.chk").string(), run.final_state);
  ctx.file(ctx.dir / "final.chk");
  return run;
}

void conservation(Context& ctx) {
  const auto& c = ctx.config;
  c.model().validate();
  const auto run = run_and_save(ctx, build_initial(c), options_from(c));
  const auto& s = run.series;
  const double dm = max_relative_drift(s.mass, 1e-300);
  const double de = max_relative_drift(s.energy, 1e-12);
  ctx.check("mass-drift", "mass is conserved: relative drift <= 1e-6", dm <= kDriftTolerance, "max drift " + fmt(dm));
  ctx.check("energy-drift", "energy is conserved: relative drift <= 1e-6", de <= kDriftTolerance, "max drift " + fmt(de));
  if (c.mu == -1 && c.k % 2 == 0) check_defocusing_bound(ctx, s);
  check_run(ctx, run);
}

void soliton_regression(Context& ctx) {
  const auto& c = ctx.config;
  require(c.mu == 1, "soliton-regression", "traveling waves need the focusing equation (mu = 1)");
  const Grid grid = c.grid();
  const Field initial = soliton(c.k, c.initial.c, c.initial.center, grid, 0.0);
  const auto run = run_and_save(ctx, initial, options_from(c));
  const double t = run.final_state.t;
  const Field exact = soliton(c.k, c.initial.c, c.initial.center, grid, t);
  const double err = sobolev_norm(run.final_state.field - exact, 0.0);
  ctx.check("soliton-l2-error", "the flow transports c^(1/k) Q(sqrt(c) x) at speed c: L2 error <= 1e-5",
            err <= kSolitonTolerance, "L2 error " + fmt(err) + " at t = " + fmt(t));
  const double g0 = run.series.grad_l2.front();
  const auto blowup = detect_blowup(run.series, 10.0 * g0 * g0);
  ctx.check("no-blowup", "a traveling wave never crosses 10x its initial gradient norm", !blowup,
            blowup ? "detected at t = " + fmt(*blowup) : "none");
  check_run(ctx, run);
}

void threshold_barrier(Context& ctx) {
  const auto& c = ctx.config;
  require(c.mu == 1, "threshold-barrier", "the threshold theorem is stated for the focusing equation (mu = 1)");
  require(c.k >= 5, "threshold-barrier", "needs k >= 5");
  const Field initial = build_initial(c);
  const auto tr = threshold_report(initial, c.k);
  ctx.report.threshold = tr;
  {
    std::ofstream out(ctx.dir / "threshold.csv");
    out << threshold_csv(tr);
  }
  ctx.file(ctx.dir / "threshold.csv");
  const auto b = barrier(initial, c.k);
  ctx.check("classification", "initial data satisfy E >= 0 and both strict threshold inequalities",
            tr.classification == ThresholdReport::Classification::theorem_applies, to_string(tr.classification));
  ctx.check("barrier-flags-agree", "2E < f(x0) matches the energy threshold and X(0) < x0 the gradient threshold",
            b.energy_below == tr.gr1_holds && b.gradient_below == tr.gr2_holds,
            "2E = " + fmt(b.a) + ", f(x0) = " + fmt(b.fx0) + ", X(0) = " + fmt(b.gradient_sq) + ", x0 = " + fmt(b.x0));

  const auto run = run_and_save(ctx, initial, options_from(c));
  const auto& s = run.series;
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    worst = std::max(worst, gradient_product(s.grad_l2[i], std::sqrt(s.mass[i]), c.k));
  }
  ctx.check("gradient-product-below", "|u_x(t)|^s_k |u(t)|^(1-s_k) stays strictly below |Q'|^s_k |Q|^(1-s_k)",
            worst < tr.rhs2, "max product " + fmt(worst) + " vs " + fmt(tr.rhs2));
  check_run(ctx, run);
}

double regularity(const SimConfig& c, double fallback) { return c.imethod_s.value_or(fallback); }

void defocusing_growth(Context& ctx) {
  const auto& c = ctx.config;
  require(c.mu == -1 && c.k % 2 == 0, "defocusing-growth", "needs the defocusing equation with even k");
  const double s = regularity(c, c.s_track);
  auto o = options_from(c);
  o.s_track = s;
  const auto run = run_and_save(ctx, build_initial(c), o);
  const auto g = growth_bound_check(run.series, c.k, s);
  ctx.check("growth-slope", "log-log growth of |u|_{H^s}^2 stays within the polynomial bound exponent + 0.5",
            g.empirical_slope <= g.theoretical_exponent + kGrowthTolerance,
            "slope " + fmt(g.empirical_slope) + ", exponent " + fmt(g.theoretical_exponent) + ", C " +
                fmt(g.fitted_constant));
  const auto blowup = detect_blowup(run.series, 1e6 * run.series.grad_l2.front() * run.series.grad_l2.front());
  ctx.check("no-blowup", "the defocusing even-power flow is global", !blowup,
            blowup ? "detected at t = " + fmt(*blowup) : "none");
  check_defocusing_bound(ctx, run.series);
  check_run(ctx, run);
}

void imethod_sweep(Context& ctx) {
  const auto& c = ctx.config;
  require(c.mu == -1 && c.k % 2 == 0, "imethod-sweep", "needs the defocusing equation with even k");
  require(!c.n_list.empty(), "imethod-sweep", "imethod.N_list is empty");
  SweepOptions o;
  o.record_every = c.record_every;
  o.dt_override = c.dt_override;
  o.workers = std::max(1, c.workers);
  const auto r = almost_conservation_sweep(build_initial(c), c.model(), {c.n_list.front(), regularity(c, 0.9)}, c.n_list,
                                           c.t_final, o);
  write_sweep_csv(ctx.dir / "sweep.csv", r);
  ctx.file(ctx.dir / "sweep.csv");
  ctx.report.sweep_slope = r.slope;
  ctx.report.under_resolved = !r.all_resolved;
  ctx.check("sweep-slope", "sup_t |E1(t) - E1(0)| decays in N with log-log slope <= -1.5", r.slope <= kSweepSlope,
            "slope " + fmt(r.slope));
  std::string increments;
  int resolved = 0;
  for (const auto& pt : r.points) {
    increments += (increments.empty() ? "" : ", ") + fmt(pt.sup_increment);
    resolved += pt.resolved ? 1 : 0;
  }
  ctx.check("sweep-monotone", "increments are nonincreasing in N within 10%", r.monotone, "increments " + increments);
  ctx.check("resolved", "every run of the sweep is resolved", r.all_resolved,
            std::to_string(resolved) + " of " + std::to_string(r.points.size()) + " resolved");
}

void gwp_schedule(Context& ctx) {
  const auto& c = ctx.config;
  const double s = regularity(c, c.s_track);
  const auto r = iteration_schedule(c.k, s, c.t_final);
  {
    std::ofstream out(ctx.dir / "schedule.csv");
    out << "k,s,T,lambda_exponent,n_exponent,log2_N,N,lambda,M,chunk_time,impractical\n";
    out << c.k << "," << fmt(s) << "," << fmt(c.t_final) << "," << fmt(r.lambda_exponent) << "," << fmt(r.n_exponent)
        << "," << fmt(r.log2_N) << "," << fmt(r.N) << "," << fmt(r.lambda) << "," << fmt(r.M) << ","
        << fmt(r.chunk_time) << "," << r.impractical << "\n";
  }
  ctx.file(ctx.dir / "schedule.csv");
  const double target = std::log2(c.t_final);
  const bool reaches = r.log2_N * r.n_exponent > target;
  const bool minimal = r.log2_N == 0.0 || (r.log2_N - 1.0) * r.n_exponent <= target;
  ctx.check("schedule-minimal", "N is the smallest power of two with N^(2 - eps - 3 lambda_exponent) > T",
            reaches && minimal, "log2 N = " + fmt(r.log2_N) + (r.impractical ? " (impractical)" : ""));
}

void resonance(Context& ctx) {
  const auto& c = ctx.config;
  const IMethodParams p{c.n_list.empty() ? 16.0 : c.n_list.front(), regularity(c, 0.9)};
  const auto w = resonance_search(c.k, p, kResonanceBudget);
  ctx.check("witness-found", "a tuple with vanishing sum and cube sum has nonzero multiplier-weighted cube sum",
            w.has_value(), w ? std::to_string(w->candidates) + " candidates examined" : "none within budget");
  if (!w) return;
  {
    std::ofstream out(ctx.dir / "witness.csv");
    out << "index,xi,m\n";
    for (std::size_t i = 0; i < w->xi.size(); ++i) {
      out << i << "," << fmt(w->xi[i]) << "," << fmt(multiplier_m(w->xi[i], p)) << "\n";
    }
  }
  ctx.file(ctx.dir / "witness.csv");
  ctx.check("sum-constraints", "the witness has sum and cube sum below 1e-10",
            std::abs(w->sum) <= 1e-10 && std::abs(w->cube_sum) <= 1e-10,
            "sum " + fmt(w->sum) + ", cube sum " + fmt(w->cube_sum));
  ctx.check("weighted-cube-sum", "normalized |sum m^2 xi^3| exceeds 1e-6", w->normalized > kResonanceThreshold,
            "normalized " + fmt(w->normalized));
}

}  // namespace

bool RunReport::passed() const {
  return !error && std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

RunReport run_scenario(const std::string& name, const SimConfig& config) {
  using Handler = void (*)(Context&);
  static const std::map<std::string, Handler> handlers = {
      {"conservation", conservation},       {"soliton-regression", soliton_regression},
      {"threshold-barrier", threshold_barrier}, {"defocusing-growth", defocusing_growth},
      {"imethod-sweep", imethod_sweep},     {"gwp-schedule", gwp_schedule},
      {"resonance", resonance}};
  const auto it = handlers.find(name);
  if (it == handlers.end()) throw std::invalid_argument("unknown scenario '" + name + "'");

  RunReport report;
  report.scenario = name;
  report.config = config_echo(config);
  report.config["scenario"] = name;
  report.started = now_iso();
  Context ctx{config, report, resolve_output_dir(config) / name};
  std::filesystem::create_directories(ctx.dir);
  it->second(ctx);
  report.finished = now_iso();
  write_report(ctx.dir / "report.json", report);
  return report;
}

std::vector<RunReport> sweep(const std::vector<SimConfig>& configs, int workers) {
  if (workers < 1) throw std::invalid_argument("sweep: workers must be >= 1");
  std::vector<RunReport> reports(configs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        reports[i] = run_scenario(configs[i].scenario, configs[i]);
      } catch (const std::exception& e) {
        RunReport r;
        r.scenario = configs[i].scenario;
        r.config = config_echo(configs[i]);
        r.error = e.what();
        reports[i] = std::move(r);
      }
    }
  };
  std::vector<std::jthread> pool;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(workers), configs.size());
  for (std::size_t w = 1; w < count; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  return reports;
}

}  // namespace gkdv
