#include <memory>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbwalk/errors.hpp"
#include "rbwalk/experiments.hpp"
#include "rbwalk/graphgen.hpp"
#include "rbwalk/theory.hpp"
#include "rbwalk/walks.hpp"

namespace py = pybind11;
using namespace rbwalk;

namespace {

WalkPolicy policy_from_dict(const py::dict& d) {
    std::string name = d.contains("policy") ? d["policy"].cast<std::string>() : "simple";
    if (name == "simple") return Simple{};
    if (name == "oblivious") return Oblivious{d["budget"].cast<int64_t>()};
    if (name == "flip") return Flip{d["rho_R"].cast<double>(), d["rho_B"].cast<double>()};
    if (name == "smooth") {
        Smooth s;
        s.alpha = d["alpha"].cast<double>();
        if (d.contains("phase_length")) s.phase_length = d["phase_length"].cast<int64_t>();
        if (d.contains("budget")) s.budget = d["budget"].cast<int64_t>();
        return s;
    }
    if (name == "congestion")
        return Congestion{d["C"].cast<int64_t>(), d["F"].cast<int64_t>()};
    throw parameter_error("unknown policy: " + name);
}

py::dict cover_result_dict(const CoverResult& r) {
    py::dict d;
    if (r.covered())
        d["cover_time"] = r.cover_time;
    else
        d["cover_time"] = py::none();
    d["red_uses"] = r.red_uses;
    d["steps_taken"] = r.steps_taken;
    d["start_vertex"] = r.start_vertex;
    d["covered"] = r.covered();
    return d;
}

} // namespace

PYBIND11_MODULE(_rbwalk, m) {
    m.doc() = "budget-constrained random walks on red/blue regular graphs";

    py::register_exception<parameter_error>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<generation_error>(m, "GenerationError", PyExc_RuntimeError);
    py::register_exception<structure_error>(m, "StructureError", PyExc_RuntimeError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_RuntimeError);

    py::class_<ColoredGraph, std::shared_ptr<ColoredGraph>>(m, "Graph")
        .def_property_readonly("n", &ColoredGraph::n)
        .def_property_readonly("r", &ColoredGraph::r)
        .def_property_readonly("b", &ColoredGraph::b)
        .def_property_readonly("degree", &ColoredGraph::degree)
        .def("connected", &ColoredGraph::connected)
        .def("blue_component", &ColoredGraph::blue_component, py::arg("v"))
        .def("blue_cycle_lengths", &ColoredGraph::blue_cycle_lengths)
        .def("edges",
             [](const ColoredGraph& g) {
                 py::list out;
                 for (const Edge& e : g.edges())
                     out.append(py::make_tuple(e.u, e.v, e.color == Color::Red ? "R" : "B"));
                 return out;
             })
        .def("write",
             [](const ColoredGraph& g, const std::string& path) { write_graph_file(g, path); },
             py::arg("path"))
        .def("dumps", [](const ColoredGraph& g) {
            std::ostringstream ss;
            write_graph(g, ss);
            return ss.str();
        });

    m.def(
        "generate",
        [](const std::string& model, int n, int r, int b, uint64_t seed) {
            GraphSpec spec{graph_model_from_name(model), n, r, b, seed};
            if (spec.model == GraphModel::Regular) {
                spec.b = b > 0 ? b : r; // allow generate("regular", n, d) style
                spec.r = 0;
            }
            return std::make_shared<ColoredGraph>(build_graph(spec));
        },
        py::arg("model"), py::arg("n"), py::arg("r"), py::arg("b") = 0, py::arg("seed") = 0);

    m.def("read_graph", [](const std::string& path) {
        return std::make_shared<ColoredGraph>(read_graph_file(path));
    });
    m.def("loads", [](const std::string& text) {
        std::istringstream ss(text);
        return std::make_shared<ColoredGraph>(read_graph(ss));
    });

    m.def("analyze", [](const ColoredGraph& g) {
        StructureReport rep = analyze_structure(g);
        py::dict d;
        d["sigma"] = rep.sigma;
        d["tree_like_count"] = rep.tree_like_count;
        d["non_tree_like_count"] = rep.non_tree_like_count;
        d["lambda2"] = rep.lambda2;
        d["blue_cycle_lengths"] = rep.blue_cycle_lengths;
        return d;
    });

    m.def("sigma_rb", &sigma_rb, py::arg("r"), py::arg("b"));
    m.def("sigma_b", &sigma_b, py::arg("b"));
    m.def("gamma_budget", &gamma_budget, py::arg("alpha"), py::arg("r"), py::arg("b"));
    m.def("smooth_cover_const", &smooth_cover_const, py::arg("alpha"), py::arg("r"), py::arg("b"));
    m.def("congestion_cover_const", &congestion_cover_const, py::arg("C"), py::arg("F"),
          py::arg("r"));
    m.def("theta_flip", &theta_flip, py::arg("q"));
    m.def("flip_smallest_root", &flip_smallest_root, py::arg("q"), py::arg("b"));
    m.def("returns_tree", &returns_tree, py::arg("s"));

    m.def(
        "flip_fixed_point",
        [](int r, int b, double rho_R, double rho_B) {
            FlipSolution s = flip_fixed_point(r, b, rho_R, rho_B);
            py::dict d;
            d["psi_R"] = s.psi_R;
            d["psi_B"] = s.psi_B;
            d["f"] = s.f;
            d["xi_R"] = s.xi_R;
            d["xi_B"] = s.xi_B;
            d["R_v"] = s.R_v;
            d["feasible"] = s.feasible;
            d["iterations"] = s.iterations;
            d["residual"] = s.residual;
            return d;
        },
        py::arg("r"), py::arg("b"), py::arg("rho_R"), py::arg("rho_B"));

    m.def(
        "predict",
        [](const std::string& model, int r, int b, int n, const py::dict& policy) {
            CoverConstant c =
                predict(graph_model_from_name(model), r, b, n, policy_from_dict(policy));
            py::dict d;
            d["model"] = c.model;
            d["law"] = c.law == CoverLaw::NLogN
                           ? "n_log_n"
                           : (c.law == CoverLaw::HalfSquared ? "half_squared" : "expected_failure");
            d["theta"] = c.theta;
            d["predicted_cover"] = c.predicted_cover(n);
            return d;
        },
        py::arg("model"), py::arg("r"), py::arg("b"), py::arg("n"), py::arg("policy"));

    m.def(
        "run_cover",
        [](const ColoredGraph& g, const py::dict& policy, int start, uint64_t seed,
           int64_t step_cap) {
            WalkPolicy p = policy_from_dict(policy);
            Rng rng(seed);
            if (step_cap <= 0) step_cap = default_step_cap(g.n());
            return cover_result_dict(run_cover(g, p, start, rng, step_cap));
        },
        py::arg("graph"), py::arg("policy"), py::arg("start"), py::arg("seed"),
        py::arg("step_cap") = 0);

    m.def(
        "estimate_cover",
        [](const std::string& model, int n, int r, int b, uint64_t graph_seed,
           const py::dict& policy, int64_t trials, uint64_t master_seed, int64_t step_cap,
           int workers) {
            ExperimentConfig cfg;
            cfg.graph = GraphSpec{graph_model_from_name(model), n, r, b, graph_seed};
            if (cfg.graph.model == GraphModel::Regular) {
                cfg.graph.b = b > 0 ? b : r;
                cfg.graph.r = 0;
            }
            cfg.policy = policy_from_dict(policy);
            cfg.trials = trials;
            cfg.master_seed = master_seed;
            cfg.step_cap = step_cap;
            cfg.workers = workers;
            ExperimentResult res = estimate_cover(cfg);
            py::dict d;
            d["n"] = res.n;
            d["r"] = res.r;
            d["b"] = res.b;
            d["policy"] = res.policy;
            d["param_json"] = res.param_json;
            d["trials"] = res.trials;
            d["failures"] = res.failures;
            d["mean_cover"] = res.mean_cover;
            d["std_cover"] = res.std_cover;
            d["min_cover"] = res.min_cover;
            d["max_cover"] = res.max_cover;
            d["q10"] = res.q10;
            d["q50"] = res.q50;
            d["q90"] = res.q90;
            d["normalized"] = res.normalized;
            if (res.theory_theta) d["theory_theta"] = *res.theory_theta;
            if (res.rel_deviation) d["rel_deviation"] = *res.rel_deviation;
            py::list rows;
            for (const TrialRow& t : res.rows) {
                py::dict rd = cover_result_dict(t.result);
                rd["trial"] = t.trial;
                rd["seed"] = t.seed;
                rows.append(rd);
            }
            d["rows"] = rows;
            std::ostringstream csv;
            write_trials_csv(csv, res);
            d["csv"] = csv.str();
            return d;
        },
        py::arg("model"), py::arg("n"), py::arg("r"), py::arg("b"), py::arg("graph_seed"),
        py::arg("policy"), py::arg("trials"), py::arg("master_seed"), py::arg("step_cap") = 0,
        py::arg("workers") = 1);

    m.def(
        "theta_sweep",
        [](const std::vector<double>& q_grid, int n, int64_t trials, uint64_t master_seed,
           int workers) {
            py::list out;
            for (const ThetaSweepRow& r : theta_sweep(q_grid, n, trials, master_seed, workers)) {
                py::dict d;
                d["q"] = r.q;
                d["theory_theta"] = r.theory_theta;
                d["empirical_theta"] = r.empirical_theta;
                d["stderr"] = r.stderr_;
                d["trials"] = r.trials;
                d["n"] = r.n;
                d["in_theorem_domain"] = r.in_theorem_domain;
                out.append(d);
            }
            return out;
        },
        py::arg("q_grid"), py::arg("n"), py::arg("trials"), py::arg("master_seed"),
        py::arg("workers") = 1);

    m.def(
        "twofactor_stats",
        [](int n, int64_t samples, uint64_t seed) {
            TwoFactorStats s = twofactor_stats(n, samples, seed);
            py::dict d;
            d["n"] = s.n;
            d["samples"] = s.samples;
            d["cycle_counts"] = s.cycle_counts;
            d["two_largest"] = s.two_largest;
            d["frac_two_big"] = s.frac_two_big;
            d["within_3log2"] = s.within_3log2;
            d["max_cycle_count"] = s.max_cycle_count;
            return d;
        },
        py::arg("n"), py::arg("samples"), py::arg("seed"));
}
