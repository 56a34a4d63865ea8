#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "queens/analysis.hpp"
#include "queens/oracle.hpp"
#include "queens/pipeline.hpp"

namespace py = pybind11;
using namespace queens;

namespace {

PartialConfig config_from(int n, const std::vector<std::pair<int, int>>& queens, Rule rule) {
  PartialConfig cfg(n);
  for (auto [r, c] : queens) cfg.place({r, c}, rule);
  return cfg;
}

py::list positions_out(const std::vector<Position>& ps) {
  py::list out;
  for (const Position& p : ps) out.append(py::make_tuple(p.row, p.col));
  return out;
}

py::dict witness_out(const BoundWitness& w) {
  py::dict d;
  d["log_x"] = w.log_x;
  d["log_y"] = w.log_y;
  d["witness"] = w.witness;
  d["theoretical"] = w.theoretical;
  d["log_x_formula"] = w.log_x_formula;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "randomized two-phase construction of n-queens configurations";

  m.def("default_stop", &default_stop, py::arg("n"));

  m.def(
      "solve",
      [](int n, uint64_t seed, std::optional<int> stop, int retries) {
        SolveResult r = solve_pipeline(n, seed, stop, retries);
        py::dict d;
        d["n"] = r.n;
        d["stop"] = r.stop;
        d["k"] = r.k;
        d["seed"] = r.seed;
        d["completed"] = r.completed;
        d["queens"] = positions_out(r.queens);
        d["attempts"] = static_cast<int>(r.attempts.size());
        d["witness"] = r.witness ? py::object(witness_out(*r.witness)) : py::object(py::none());
        return d;
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("stop") = py::none(), py::arg("retries") = 3,
      "Run greedy placement plus absorber completion; retries on abort with seed+1, ...");

  m.def(
      "run_greedy",
      [](int n, int stop, uint64_t seed, bool record_lines) {
        GreedyOutcome out = run_greedy({n, stop, seed, record_lines});
        py::dict d;
        d["placed"] = out.placed;
        d["aborted"] = out.aborted;
        d["queens"] = positions_out(out.config.queens());
        d["available"] = out.trajectory.available;
        if (record_lines) d["step_audit_ok"] = step_change_audit(out);
        return d;
      },
      py::arg("n"), py::arg("stop"), py::arg("seed") = 0, py::arg("record_lines") = false);

  m.def(
      "verify",
      [](int n, const std::vector<std::pair<int, int>>& queens, bool toroidal) {
        try {
          config_from(n, queens, toroidal ? Rule::Toroidal : Rule::Classical);
        } catch (const std::invalid_argument&) {
          return false;
        }
        return true;
      },
      py::arg("n"), py::arg("queens"), py::arg("toroidal") = false,
      "True iff the queen list is a valid partial configuration under the rule");

  m.def(
      "available_set",
      [](int n, const std::vector<std::pair<int, int>>& queens) {
        return positions_out(available_set(config_from(n, queens, Rule::Toroidal)));
      },
      py::arg("n"), py::arg("queens"));

  m.def(
      "absorbers",
      [](int n, const std::vector<std::pair<int, int>>& queens, int row, int col) {
        return positions_out(absorbers(config_from(n, queens, Rule::Classical), {row, col}));
      },
      py::arg("n"), py::arg("queens"), py::arg("row"), py::arg("col"));

  m.def(
      "safe_absorbers",
      [](int n, const std::vector<std::pair<int, int>>& cells, int row, int col) {
        std::vector<Position> r_set;
        r_set.reserve(cells.size());
        for (auto [r, c] : cells) r_set.push_back({r, c});
        return positions_out(safe_absorbers(r_set, {row, col}, n));
      },
      py::arg("n"), py::arg("cells"), py::arg("row"), py::arg("col"));

  m.def(
      "is_balanced", [](int row, int col, int n) { return is_balanced({row, col}, n); },
      py::arg("row"), py::arg("col"), py::arg("n"));

  m.def(
      "balanced_region", [](int n) { return positions_out(balanced_region(n)); }, py::arg("n"));

  m.def(
      "balanced_pair_count",
      [](int n, int row, int col) { return balanced_pair_count(n, {row, col}); }, py::arg("n"),
      py::arg("row"), py::arg("col"));

  m.def(
      "enumerate_classic", [](int n, bool force) { return enumerate_classic(n, force).count; },
      py::arg("n"), py::arg("force") = false);

  m.def(
      "enumerate_toroidal", [](int n, bool force) { return enumerate_toroidal(n, force).count; },
      py::arg("n"), py::arg("force") = false);

  m.def(
      "predict",
      [](int t, int n) {
        TrajectoryPrediction pr = predict(t, n);
        py::dict d;
        d["t"] = pr.t;
        d["p"] = pr.p;
        d["s"] = pr.s;
        d["eps"] = pr.eps;
        d["a_pred"] = pr.a_pred;
        d["a_band"] = pr.a_band;
        return d;
      },
      py::arg("t"), py::arg("n"));

  m.def(
      "coupling_experiment",
      [](int n, double p, uint64_t seed, std::optional<int> stop) {
        CouplingReport rep = coupling_experiment(n, p, seed, stop.value_or(default_stop(n)));
        py::dict d;
        d["n"] = rep.n;
        d["p"] = rep.p_param;
        d["r_size"] = rep.r_size;
        d["r_tilde_size"] = rep.r_tilde_size;
        d["placed"] = rep.placed;
        d["inclusion_holds"] = rep.inclusion_holds;
        py::dict sc;
        sc["samples"] = rep.safe_counts.samples;
        sc["min"] = rep.safe_counts.min;
        sc["max"] = rep.safe_counts.max;
        sc["mean"] = rep.safe_counts.mean;
        d["safe_counts"] = sc;
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("stop") = py::none());

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
