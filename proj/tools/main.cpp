#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "queens/analysis.hpp"
#include "queens/oracle.hpp"
#include "queens/pipeline.hpp"
#include "queens/rng.hpp"

using json = nlohmann::ordered_json;
using namespace queens;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitAbort = 1;
constexpr int kExitUsage = 2;

// shortest round-trip representation, locale-independent
std::string dstr(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path " + out_path);
  out << text;
}

json witness_json(const BoundWitness& w) {
  json j;
  j["log_x"] = w.log_x;
  j["log_y"] = w.log_y;
  j["witness"] = w.witness;
  j["theoretical"] = w.theoretical;
  j["log_x_formula"] = w.log_x_formula;
  return j;
}

json queens_json(const std::vector<Position>& queens) {
  json arr = json::array();
  for (const Position& q : queens) arr.push_back(json::array({q.row, q.col}));
  return arr;
}

json run_record(const SolveResult& r) {
  json rec;
  rec["schema_version"] = "1";
  rec["n"] = r.n;
  rec["stop"] = r.stop;
  rec["k"] = r.k;
  rec["seed"] = r.seed;
  const SolveAttempt& last = r.attempts.back();
  rec["phase1"] = {{"placed", last.placed}, {"aborted", last.phase1_aborted}};
  json phase2;
  phase2["completed"] = last.completed;
  if (last.completed || last.phase1_aborted) {
    phase2["abort_step"] = nullptr;
    phase2["abort_query"] = nullptr;
  } else {
    phase2["abort_step"] = last.abort_step;
    phase2["abort_query"] = json::array({last.abort_query.row, last.abort_query.col});
  }
  rec["phase2"] = phase2;
  rec["queens"] = queens_json(r.queens);
  rec["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
  json attempts = json::array();
  for (const SolveAttempt& a : r.attempts) {
    json aj;
    aj["seed"] = a.seed;
    aj["phase1"] = {{"placed", a.placed}, {"aborted", a.phase1_aborted}};
    aj["completed"] = a.completed;
    if (!a.completed && !a.phase1_aborted) {
      aj["abort_step"] = a.abort_step;
      aj["abort_query"] = json::array({a.abort_query.row, a.abort_query.col});
    }
    attempts.push_back(aj);
  }
  rec["attempts"] = attempts;
  return rec;
}

// revalidation before emission
void check_emitted(const SolveResult& r) {
  if (!r.completed) return;
  PartialConfig cfg(r.n);
  for (const Position& q : r.queens) cfg.place(q, Rule::Classical);
  if (cfg.size() != r.n || !verify(cfg, Rule::Classical)) {
    throw std::logic_error("completed run failed revalidation");
  }
}

int cmd_solve(int n, uint64_t seed, std::optional<int> stop, int retries, const std::string& out_path) {
  SolveResult result = solve_pipeline(n, seed, stop, retries);
  check_emitted(result);
  emit(run_record(result).dump(2) + "\n", out_path);
  return result.completed ? kExitSuccess : kExitAbort;
}

int cmd_trajectory(int n, uint64_t seed, std::optional<int> stop, double rel_tol) {
  GreedyParams params{n, stop.value_or(default_stop(n)), mix_seed(seed, 1), true};
  GreedyOutcome outcome = run_greedy(params);
  ConcentrationReport rep = concentration_report(outcome.trajectory, n, rel_tol);
  std::ostringstream csv;
  csv << "t,available,pred_available,paper_band,desk_band_pass,min_s_ell,max_s_ell,pred_s,eps,"
         "band_vacuous\n";
  for (const StepBandReport& sb : rep.steps) {
    csv << sb.t << ',' << sb.available << ',' << dstr(sb.a_pred) << ',' << (sb.paper_avail ? 1 : 0)
        << ',' << (sb.desk_avail ? 1 : 0) << ',' << sb.min_s << ',' << sb.max_s << ','
        << dstr(sb.s_pred) << ',' << dstr(sb.eps) << ',' << (sb.band_vacuous ? 1 : 0) << '\n';
  }
  std::cout << csv.str();
  return kExitSuccess;
}

int cmd_enumerate(int n, bool toroidal, bool force) {
  EnumerationResult res = toroidal ? enumerate_toroidal(n, force) : enumerate_classic(n, force);
  json j;
  j["schema_version"] = "1";
  j["n"] = res.n;
  j["rule"] = toroidal ? "toroidal" : "classical";
  j["count"] = res.count;
  std::cout << j.dump(2) << "\n";
  return kExitSuccess;
}

struct TrialResult {
  SolveResult solve;
  std::optional<CouplingReport> coupling;
};

int cmd_campaign(int n, int trials, uint64_t seed, std::optional<int> stop_opt, int retries, int jobs,
                 double coupling_p, const std::string& out_path) {
  int stop = stop_opt.value_or(default_stop(n));
  std::vector<std::optional<TrialResult>> results(trials);
  std::atomic<int> next{0};
  int workers = std::max(1, std::min(jobs, trials));
  auto work = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= trials) return;
      TrialResult tr{solve_pipeline(n, mix_seed(seed, i), stop, retries), std::nullopt};
      if (coupling_p > 0.0) {
        tr.coupling = coupling_experiment(n, coupling_p, mix_seed(mix_seed(seed, i), 3), stop);
      }
      results[i] = std::move(tr);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  // aggregation in trial order, so the output is independent of scheduling
  int completed = 0;
  std::vector<double> decile_sum(10, 0.0);
  int decile_runs = 0;
  std::vector<double> witnesses;
  for (int i = 0; i < trials; ++i) {
    const TrialResult& tr = *results[i];
    if (tr.solve.completed) ++completed;
    if (static_cast<int>(tr.solve.trajectory.available.size()) == stop && stop > 0) {
      ++decile_runs;
      for (int d = 0; d < 10; ++d) {
        int t = static_cast<int>((static_cast<int64_t>(d) * stop) / 10);
        decile_sum[d] += static_cast<double>(tr.solve.trajectory.available[t]);
      }
    }
    if (tr.solve.witness) witnesses.push_back(tr.solve.witness->witness);
  }

  json j;
  j["schema_version"] = "1";
  j["n"] = n;
  j["trials"] = trials;
  j["seed"] = seed;
  j["stop"] = stop;
  j["retries"] = retries;
  j["success_rate"] = static_cast<double>(completed) / trials;
  if (decile_runs > 0) {
    json deciles = json::array();
    for (int d = 0; d < 10; ++d) deciles.push_back(decile_sum[d] / decile_runs);
    j["mean_available_by_decile"] = deciles;
  } else {
    j["mean_available_by_decile"] = nullptr;
  }
  if (!witnesses.empty()) {
    double mean = 0.0, mn = witnesses[0], mx = witnesses[0];
    for (double w : witnesses) {
      mean += w;
      mn = std::min(mn, w);
      mx = std::max(mx, w);
    }
    mean /= static_cast<double>(witnesses.size());
    double var = 0.0;
    for (double w : witnesses) var += (w - mean) * (w - mean);
    double sd = witnesses.size() > 1 ? std::sqrt(var / (witnesses.size() - 1)) : 0.0;
    json ws;
    ws["count"] = witnesses.size();
    ws["mean"] = mean;
    ws["stddev"] = sd;
    ws["min"] = mn;
    ws["max"] = mx;
    if (n >= 2) {
      double norm = static_cast<double>(n) * std::log(static_cast<double>(n));
      ws["mean_normalized"] = mean / norm;
      ws["stddev_normalized"] = sd / norm;
    } else {
      ws["mean_normalized"] = nullptr;
      ws["stddev_normalized"] = nullptr;
    }
    j["witness_stats"] = ws;
  } else {
    j["witness_stats"] = nullptr;
  }
  if (coupling_p > 0.0) {
    int64_t r_sum = 0, rt_sum = 0;
    int eligible = 0, held = 0;
    double safe_mean_sum = 0.0;
    for (int i = 0; i < trials; ++i) {
      const CouplingReport& cr = *results[i]->coupling;
      r_sum += cr.r_size;
      rt_sum += cr.r_tilde_size;
      if (cr.r_size <= stop) {
        ++eligible;
        if (cr.inclusion_holds) ++held;
      }
      safe_mean_sum += cr.safe_counts.mean;
    }
    json cs;
    cs["p"] = coupling_p;
    cs["mean_r"] = static_cast<double>(r_sum) / trials;
    cs["mean_r_tilde"] = static_cast<double>(rt_sum) / trials;
    cs["trials_with_r_le_stop"] = eligible;
    cs["inclusion_rate_given_r_le_stop"] =
        eligible > 0 ? json(static_cast<double>(held) / eligible) : json(nullptr);
    cs["mean_safe_count"] = safe_mean_sum / trials;
    j["coupling_stats"] = cs;
  }
  emit(j.dump(2) + "\n", out_path);
  return kExitSuccess;
}

int cmd_coupling(int n, int trials, uint64_t seed, std::optional<int> stop_opt, double p,
                 const std::string& out_path) {
  int stop = stop_opt.value_or(default_stop(n));
  json reports = json::array();
  int eligible = 0, held = 0;
  for (int i = 0; i < trials; ++i) {
    CouplingReport cr = coupling_experiment(n, p, mix_seed(seed, i), stop);
    json r;
    r["seed"] = mix_seed(seed, i);
    r["r_size"] = cr.r_size;
    r["r_tilde_size"] = cr.r_tilde_size;
    r["placed"] = cr.placed;
    r["inclusion_holds"] = cr.inclusion_holds;
    r["safe_counts"] = {{"samples", cr.safe_counts.samples},
                        {"min", cr.safe_counts.min},
                        {"max", cr.safe_counts.max},
                        {"mean", cr.safe_counts.mean}};
    reports.push_back(r);
    if (cr.r_size <= stop) {
      ++eligible;
      if (cr.inclusion_holds) ++held;
    }
  }
  json j;
  j["schema_version"] = "1";
  j["n"] = n;
  j["p"] = p;
  j["stop"] = stop;
  j["trials"] = trials;
  j["trials_with_r_le_stop"] = eligible;
  j["inclusion_rate_given_r_le_stop"] =
      eligible > 0 ? json(static_cast<double>(held) / eligible) : json(nullptr);
  j["reports"] = reports;
  emit(j.dump(2) + "\n", out_path);
  return kExitSuccess;
}

int cmd_bound(const std::string& in_path) {
  json rec;
  if (in_path.empty() || in_path == "-") {
    rec = json::parse(std::cin);
  } else {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open input path " + in_path);
    rec = json::parse(in);
  }
  int n = rec.at("n").get<int>();
  if (rec.at("phase2").at("completed").get<bool>()) {
    PartialConfig cfg(n);
    for (const auto& q : rec.at("queens")) {
      cfg.place({q.at(0).get<int>(), q.at(1).get<int>()}, Rule::Classical);
    }
    if (cfg.size() != n || !verify(cfg, Rule::Classical)) {
      std::cerr << "stored queens fail classical validation\n";
      return kExitAbort;
    }
  }
  if (rec.at("witness").is_null()) {
    std::cerr << "record carries no counting witness\n";
    return kExitAbort;
  }
  json j;
  j["schema_version"] = "1";
  j["n"] = n;
  j["stop"] = rec.at("stop");
  j["k"] = rec.at("k");
  j["witness"] = rec.at("witness");
  std::cout << j.dump(2) << "\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-phase randomized construction of n-queens configurations"};
  app.require_subcommand(1);

  int n = 0;
  uint64_t seed = 0;
  int retries = 3;
  int trials = 1;
  int jobs = 1;
  double rel_tol = 0.1;
  double coupling_p = 0.0;
  bool toroidal = false;
  bool force = false;
  std::string out_path;
  std::string in_path;
  std::optional<int> stop;
  auto add_stop = [&stop](CLI::App* cmd) {
    cmd->add_option_function<int>(
           "--stop", [&stop](const int& v) { stop = v; },
           "phase-1 queen target (default n - ceil(n^0.7))")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "run the two-phase pipeline and print a run record");
  solve->add_option("--n", n, "board size")->required()->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "master seed");
  add_stop(solve);
  solve->add_option("--retries", retries, "extra attempts after an abort")->check(CLI::NonNegativeNumber);
  solve->add_option("--out", out_path, "write the record here instead of stdout");

  CLI::App* traj = app.add_subcommand("trajectory", "run phase 1 with line records and print CSV");
  traj->add_option("--n", n, "board size (at least 2)")->required()->check(CLI::Range(2, 1 << 30));
  traj->add_option("--seed", seed, "master seed");
  add_stop(traj);
  traj->add_option("--rel-tol", rel_tol, "relative half-width of the desk band")
      ->check(CLI::NonNegativeNumber);

  CLI::App* enumerate = app.add_subcommand("enumerate", "exact solution count by backtracking");
  enumerate->add_option("--n", n, "board size")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--toroidal", toroidal, "count toroidal configurations");
  enumerate->add_flag("--force", force, "lift the n <= 14 guard");

  CLI::App* campaign = app.add_subcommand("campaign", "seeded batch of pipelines with aggregate stats");
  campaign->add_option("--n", n, "board size")->required()->check(CLI::PositiveNumber);
  campaign->add_option("--trials", trials, "number of independent pipelines")
      ->required()
      ->check(CLI::PositiveNumber);
  campaign->add_option("--seed", seed, "master seed; trial i uses mix(seed, i)");
  add_stop(campaign);
  campaign->add_option("--retries", retries, "extra attempts per trial")->check(CLI::NonNegativeNumber);
  campaign->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  campaign->add_option("--coupling-p", coupling_p, "also run a coupling experiment at this density")
      ->check(CLI::Range(0.0, 1.0));
  campaign->add_option("--out", out_path, "write the summary here instead of stdout");

  CLI::App* coupling = app.add_subcommand("coupling", "rank-coupled binomial subset experiment");
  coupling->add_option("--n", n, "board size")->required()->check(CLI::PositiveNumber);
  coupling->add_option("--seed", seed, "master seed");
  coupling->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  add_stop(coupling);
  coupling->add_option("--coupling-p", coupling_p, "cell density (default 1/(4n))")
      ->check(CLI::Range(0.0, 1.0));
  coupling->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* bound = app.add_subcommand("bound", "print the counting witness of a stored run record");
  bound->add_option("--in", in_path, "record path, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(n, seed, stop, retries, out_path);
    if (traj->parsed()) return cmd_trajectory(n, seed, stop, rel_tol);
    if (enumerate->parsed()) return cmd_enumerate(n, toroidal, force);
    if (campaign->parsed()) return cmd_campaign(n, trials, seed, stop, retries, jobs, coupling_p, out_path);
    if (coupling->parsed()) {
      double p = coupling_p > 0.0 ? coupling_p : 1.0 / (4.0 * n);
      return cmd_coupling(n, trials, seed, stop, p, out_path);
    }
    if (bound->parsed()) return cmd_bound(in_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAbort;
  }
  return kExitUsage;
}
