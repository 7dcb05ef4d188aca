#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbwalk/errors.hpp"
#include "rbwalk/experiments.hpp"
#include "rbwalk/graphgen.hpp"
#include "rbwalk/theory.hpp"
#include "rbwalk/walks.hpp"

using nlohmann::json;
using namespace rbwalk;

namespace {

constexpr const char* kSeedRule = "trial i stream seed = splitmix64(master_seed + (i+1)*0x9e3779b97f4a7c15)";

void echo_config(const json& j) { std::cerr << j.dump() << std::endl; }

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw parameter_error("cannot open output file: " + path);
    return file;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw parameter_error("empty list: " + s);
    return out;
}

std::vector<int64_t> parse_int_list(const std::string& s) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw parameter_error("empty list: " + s);
    return out;
}

int default_threads() {
    if (const char* env = std::getenv("RBWALK_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct PolicyFlags {
    std::string policy = "simple";
    int64_t budget = -1;
    double budget_frac = -1;
    double rho_R = -1, rho_B = -1, q = -1;
    double alpha = -1;
    int64_t phase_length = 0;
    int64_t C = -1, F = -1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--policy", policy, "simple|oblivious|flip|smooth|congestion")
            ->default_val("simple");
        cmd->add_option("--budget", budget, "red-use budget (count of red traversals)");
        cmd->add_option("--budget-frac", budget_frac,
                        "red-use budget as a fraction of the unconstrained walk's expected "
                        "total red use: budget = ceil(x * sigma_RB * r/(r+b) * n ln n)");
        cmd->add_option("--rho-r", rho_R, "flip: probability of a given red edge");
        cmd->add_option("--rho-b", rho_B, "flip: probability of a given blue edge");
        cmd->add_option("--q", q, "flip shorthand for r=1,b=2: rho_R=1-q, rho_B=q/2");
        cmd->add_option("--alpha", alpha, "smooth: budget fraction in [0,1]");
        cmd->add_option("--phase-length", phase_length,
                        "smooth: steps per phase (default ceil(ln^2 n * ln ln n))");
        cmd->add_option("--C", C, "congestion: peak (blue-only) period length");
        cmd->add_option("--F", F, "congestion: free (all-edges) period length");
    }

    int64_t resolve_budget(int r, int b, int n, bool required) const {
        if (budget >= 0 && budget_frac >= 0)
            throw parameter_error("--budget and --budget-frac are mutually exclusive");
        if (budget >= 0) return budget;
        if (budget_frac >= 0) {
            double v = budget_frac * sigma_rb(r, b) * double(r) / double(r + b) * double(n) *
                       std::log(double(n));
            return int64_t(std::ceil(v));
        }
        if (required) throw parameter_error("oblivious policy needs --budget or --budget-frac");
        return -1;
    }

    WalkPolicy build(int r, int b, int n) const {
        if (policy == "simple") return Simple{};
        if (policy == "oblivious") return Oblivious{resolve_budget(r, b, n, true)};
        if (policy == "flip") {
            double rr = rho_R, rb = rho_B;
            if (q >= 0) {
                if (rr >= 0 || rb >= 0)
                    throw parameter_error("--q and --rho-r/--rho-b are mutually exclusive");
                if (r != 1 || b != 2) throw parameter_error("--q shorthand needs r=1, b=2");
                rr = 1.0 - q;
                rb = q / 2.0;
            }
            if (rr < 0 || rb < 0) throw parameter_error("flip policy needs --rho-r and --rho-b (or --q)");
            return Flip{rr, rb};
        }
        if (policy == "smooth") {
            if (alpha < 0) throw parameter_error("smooth policy needs --alpha");
            int64_t bud = resolve_budget(r, b, n, false);
            return Smooth{alpha, phase_length, bud};
        }
        if (policy == "congestion") {
            if (C < 0 || F < 0) throw parameter_error("congestion policy needs --C and --F");
            return Congestion{C, F};
        }
        throw parameter_error("unknown policy: " + policy);
    }
};

json policy_json(const WalkPolicy& p) { return json::parse(policy_param_json(p)); }

void print_aggregate(std::ostream& out, const std::string& q_or_alpha,
                     std::optional<double> theory, double empirical, double se,
                     int64_t trials, int n) {
    write_aggregate_csv_header(out);
    write_aggregate_row(out, q_or_alpha, theory, empirical, se, trials, n);
}

// ---- subcommand implementations ----

struct GenArgs {
    std::string model = "union";
    int n = 0, r = 0, b = 0, d = 0;
    uint64_t seed = 0;
    std::string out;
};

void cmd_gen(const GenArgs& a) {
    GraphSpec spec;
    spec.model = graph_model_from_name(a.model);
    spec.n = a.n;
    spec.seed = a.seed;
    if (spec.model == GraphModel::Regular) {
        if (a.d <= 0) throw parameter_error("regular model needs --d");
        spec.r = 0;
        spec.b = a.d;
    } else {
        spec.r = a.r;
        spec.b = (spec.model == GraphModel::Union) ? a.b : 2;
    }
    echo_config({{"subcommand", "gen"},
                 {"model", a.model},
                 {"n", spec.n},
                 {"r", spec.r},
                 {"b", spec.b},
                 {"seed", spec.seed},
                 {"out", a.out}});
    ColoredGraph g = build_graph(spec);
    std::ofstream file;
    write_graph(g, open_out(file, a.out));
}

struct RunArgs {
    std::string graph;
    PolicyFlags pol;
    uint64_t seed = 0;
    int64_t step_cap = 0;
    int start = -1;
    std::string out;
};

void cmd_run(const RunArgs& a) {
    ColoredGraph g = read_graph_file(a.graph);
    if (!g.connected()) throw structure_error("graph is disconnected; cover time undefined");
    WalkPolicy policy = a.pol.build(g.r(), g.b(), g.n());
    if (auto* s = std::get_if<Smooth>(&policy)) {
        if (s->phase_length <= 0) s->phase_length = default_phase_length(g.n());
        if (s->budget < 0) s->budget = smooth_default_budget(s->alpha, g.r(), g.b(), g.n());
    }
    int64_t cap = a.step_cap > 0 ? a.step_cap : default_step_cap(g.n());
    Rng rng = trial_rng(a.seed, 0);
    int start = a.start >= 0 ? a.start : int(rng.below(uint32_t(g.n())));
    if (start >= g.n()) throw parameter_error("--start out of range");
    echo_config({{"subcommand", "run"},
                 {"graph", a.graph},
                 {"n", g.n()},
                 {"r", g.r()},
                 {"b", g.b()},
                 {"policy", policy_name(policy)},
                 {"params", policy_json(policy)},
                 {"seed", a.seed},
                 {"trial_seed", trial_seed(a.seed, 0)},
                 {"start", start},
                 {"step_cap", cap}});
    CoverResult res = run_cover(g, policy, start, rng, cap);

    ExperimentResult table;
    table.n = g.n();
    table.r = g.r();
    table.b = g.b();
    table.policy = policy_name(policy);
    table.param_json = policy_param_json(policy);
    table.rows.push_back({0, trial_seed(a.seed, 0), res, {}});
    std::ofstream file;
    write_trials_csv(open_out(file, a.out), table);
}

struct ExperimentArgs {
    std::string kind = "cover";
    std::string model = "union";
    int n = 0, r = 1, b = 2, d = 0;
    bool graph_seed_set = false;
    uint64_t graph_seed = 0;
    uint64_t seed = 0;
    int64_t trials = 10;
    int threads = default_threads();
    int64_t step_cap = 0;
    std::string out;
    PolicyFlags pol;
    std::string sweep_q;
    int64_t samples = 100;
    int vertex = -1;
    std::string t_grid;
    int64_t horizon = 0;
};

GraphSpec experiment_graph_spec(const ExperimentArgs& a) {
    GraphSpec spec;
    spec.model = graph_model_from_name(a.model);
    spec.n = a.n;
    spec.seed = a.graph_seed_set ? a.graph_seed : a.seed;
    if (spec.model == GraphModel::Regular) {
        if (a.d <= 0) throw parameter_error("regular model needs --d");
        spec.r = 0;
        spec.b = a.d;
    } else {
        spec.r = a.r;
        spec.b = (spec.model == GraphModel::Union) ? a.b : 2;
    }
    return spec;
}

void experiment_cover(const ExperimentArgs& a) {
    ExperimentConfig cfg;
    cfg.graph = experiment_graph_spec(a);
    cfg.policy = a.pol.build(cfg.graph.r, cfg.graph.b, cfg.graph.n);
    cfg.trials = a.trials;
    cfg.master_seed = a.seed;
    cfg.step_cap = a.step_cap;
    cfg.workers = a.threads;
    echo_config({{"subcommand", "experiment"},
                 {"kind", "cover"},
                 {"model", a.model},
                 {"n", cfg.graph.n},
                 {"r", cfg.graph.r},
                 {"b", cfg.graph.b},
                 {"graph_seed", cfg.graph.seed},
                 {"policy", policy_name(cfg.policy)},
                 {"params", policy_json(cfg.policy)},
                 {"master_seed", cfg.master_seed},
                 {"trial_seed_rule", kSeedRule},
                 {"trials", cfg.trials},
                 {"threads", cfg.workers},
                 {"step_cap", cfg.step_cap},
                 {"out", a.out}});
    ExperimentResult res = estimate_cover(cfg);

    double se = res.std_cover /
                (std::sqrt(double(std::max<int64_t>(1, res.trials - res.failures))) *
                 double(res.n) * std::log(double(res.n)));
    std::string q_or_alpha;
    if (auto* f = std::get_if<Flip>(&cfg.policy))
        q_or_alpha = std::to_string(double(res.b) * f->rho_B);
    else if (auto* s = std::get_if<Smooth>(&cfg.policy))
        q_or_alpha = std::to_string(s->alpha);
    else if (a.pol.budget_frac >= 0)
        q_or_alpha = std::to_string(a.pol.budget_frac);

    if (!a.out.empty()) {
        std::ofstream file;
        write_trials_csv(open_out(file, a.out), res);
        print_aggregate(std::cout, q_or_alpha, res.theory_theta, res.normalized, se,
                        res.trials, res.n);
    } else {
        write_trials_csv(std::cout, res);
        std::cout << "\n";
        print_aggregate(std::cout, q_or_alpha, res.theory_theta, res.normalized, se,
                        res.trials, res.n);
    }
    std::cerr << "covered " << (res.trials - res.failures) << "/" << res.trials
              << " mean_cover " << res.mean_cover << " normalized " << res.normalized;
    if (res.theory_theta) std::cerr << " theory " << *res.theory_theta;
    if (res.rel_deviation) std::cerr << " rel_dev " << *res.rel_deviation;
    std::cerr << std::endl;
}

void experiment_sweep(const ExperimentArgs& a) {
    if (a.sweep_q.empty()) throw parameter_error("sweep needs --sweep-q q1,q2,...");
    auto grid = parse_double_list(a.sweep_q);
    echo_config({{"subcommand", "experiment"},
                 {"kind", "sweep"},
                 {"q_grid", grid},
                 {"n", a.n},
                 {"trials_per_point", a.trials},
                 {"master_seed", a.seed},
                 {"trial_seed_rule", kSeedRule},
                 {"threads", a.threads},
                 {"out", a.out}});
    auto rows = theta_sweep(grid, a.n, a.trials, a.seed, a.threads);
    std::ofstream file;
    std::ostream& out = open_out(file, a.out);
    write_aggregate_csv_header(out);
    for (const auto& r : rows) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", r.q);
        write_aggregate_row(out, buf, r.theory_theta, r.empirical_theta, r.stderr_, r.trials,
                            r.n);
    }
}

void experiment_twofactor(const ExperimentArgs& a) {
    echo_config({{"subcommand", "experiment"},
                 {"kind", "twofactor"},
                 {"n", a.n},
                 {"samples", a.samples},
                 {"master_seed", a.seed},
                 {"trial_seed_rule", kSeedRule},
                 {"out", a.out}});
    TwoFactorStats st = twofactor_stats(a.n, a.samples, a.seed);
    std::ofstream file;
    std::ostream& out = open_out(file, a.out);
    out << "sample,cycle_count,largest,second_largest\n";
    for (size_t i = 0; i < st.cycle_counts.size(); ++i)
        out << i << ',' << st.cycle_counts[i] << ',' << st.two_largest[i].first << ','
            << st.two_largest[i].second << '\n';
    std::cerr << "frac_two_big " << st.frac_two_big << " within_3log2 " << st.within_3log2
              << "/" << st.samples << " max_cycle_count " << st.max_cycle_count << std::endl;
}

void experiment_returns(const ExperimentArgs& a) {
    if (a.vertex < 0) throw parameter_error("returns needs --vertex");
    GraphSpec spec = experiment_graph_spec(a);
    ColoredGraph g = build_graph(spec);
    int64_t horizon = a.horizon > 0
                          ? a.horizon
                          : int64_t(std::ceil(20.0 * std::log(double(g.n()))));
    echo_config({{"subcommand", "experiment"},
                 {"kind", "returns"},
                 {"model", a.model},
                 {"n", g.n()},
                 {"r", g.r()},
                 {"b", g.b()},
                 {"graph_seed", spec.seed},
                 {"vertex", a.vertex},
                 {"horizon", horizon},
                 {"trials", a.trials},
                 {"master_seed", a.seed},
                 {"trial_seed_rule", kSeedRule},
                 {"threads", a.threads},
                 {"out", a.out}});
    auto means = estimate_returns(g, {a.vertex}, horizon, a.trials, a.seed, a.threads);
    std::ofstream file;
    std::ostream& out = open_out(file, a.out);
    out << "vertex,mean_returns,horizon,trials\n";
    out << a.vertex << ',' << means[0] << ',' << horizon << ',' << a.trials << '\n';
}

void experiment_nonvisit(const ExperimentArgs& a) {
    if (a.vertex < 0) throw parameter_error("nonvisit needs --vertex");
    if (a.t_grid.empty()) throw parameter_error("nonvisit needs --t-grid t1,t2,...");
    GraphSpec spec = experiment_graph_spec(a);
    ColoredGraph g = build_graph(spec);
    auto grid = parse_int_list(a.t_grid);
    echo_config({{"subcommand", "experiment"},
                 {"kind", "nonvisit"},
                 {"model", a.model},
                 {"n", g.n()},
                 {"r", g.r()},
                 {"b", g.b()},
                 {"graph_seed", spec.seed},
                 {"vertex", a.vertex},
                 {"t_grid", grid},
                 {"trials", a.trials},
                 {"master_seed", a.seed},
                 {"trial_seed_rule", kSeedRule},
                 {"threads", a.threads},
                 {"out", a.out}});
    NonvisitCurve c = nonvisit_curve(g, a.vertex, grid, a.trials, a.seed, a.threads);
    std::ofstream file;
    std::ostream& out = open_out(file, a.out);
    out << "t,empirical,stderr,predicted\n";
    for (size_t i = 0; i < c.t.size(); ++i)
        out << c.t[i] << ',' << c.empirical[i] << ',' << c.stderr_[i] << ',' << c.predicted[i]
            << '\n';
    std::cerr << "p_v " << c.p_v << " t_mix " << c.t_mix << " v_tree_like " << c.v_tree_like
              << std::endl;
}

void cmd_analyze(const std::string& path) {
    ColoredGraph g = read_graph_file(path);
    echo_config({{"subcommand", "analyze"},
                 {"graph", path},
                 {"n", g.n()},
                 {"r", g.r()},
                 {"b", g.b()}});
    StructureReport rep = analyze_structure(g);
    std::cout << "sigma " << rep.sigma << "\n";
    std::cout << "tree_like " << rep.tree_like_count << "\n";
    std::cout << "non_tree_like " << rep.non_tree_like_count << "\n";
    std::cout << "lambda2 " << rep.lambda2 << "\n";
    if (g.b() == 2) {
        std::cout << "blue_cycle_count " << rep.blue_cycle_lengths.size() << "\n";
        std::cout << "blue_cycle_lengths";
        for (auto l : rep.blue_cycle_lengths) std::cout << ' ' << l;
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-walk cover-time laboratory for red/blue regular graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a graph file");
    cgen->add_option("--model", gen.model, "regular|union|hamilton|twofactor")->required();
    cgen->add_option("--n", gen.n, "vertex count")->required();
    cgen->add_option("--r", gen.r, "red degree");
    cgen->add_option("--b", gen.b, "blue degree (union model)");
    cgen->add_option("--d", gen.d, "degree (regular model)");
    cgen->add_option("--seed", gen.seed, "generator seed");
    cgen->add_option("-o,--out", gen.out, "output path (default stdout)");
    cgen->callback([&] { cmd_gen(gen); });

    auto* cth = app.add_subcommand("theory", "closed-form and numeric predictions");
    cth->require_subcommand(1);

    struct {
        int r = 1, b = 2;
        double alpha = 0.5, q = -1, rho_R = -1, rho_B = -1, C = 0, F = 1;
        double from = 0.05, to = 0.99;
        int steps = 95;
        std::string out;
    } th;

    auto* tsig = cth->add_subcommand("sigma", "cover constants sigma_RB, sigma_B");
    tsig->add_option("--r", th.r)->required();
    tsig->add_option("--b", th.b)->required();
    tsig->callback([&] {
        echo_config({{"subcommand", "theory sigma"}, {"r", th.r}, {"b", th.b}});
        std::printf("sigma_RB %.12g\n", sigma_rb(th.r, th.b));
        if (th.b >= 3)
            std::printf("sigma_B %.12g\n", sigma_b(th.b));
        else
            std::printf("sigma_B undefined (b = 2 is the cycle regime)\n");
    });

    auto* tgam = cth->add_subcommand("gamma", "red budget constant gamma(alpha)");
    tgam->add_option("--alpha", th.alpha)->required();
    tgam->add_option("--r", th.r)->required();
    tgam->add_option("--b", th.b)->required();
    tgam->callback([&] {
        echo_config({{"subcommand", "theory gamma"}, {"alpha", th.alpha}, {"r", th.r}, {"b", th.b}});
        std::printf("gamma %.12g\n", gamma_budget(th.alpha, th.r, th.b));
    });

    auto* tsm = cth->add_subcommand("smooth", "smooth-walk cover constant");
    tsm->add_option("--alpha", th.alpha)->required();
    tsm->add_option("--r", th.r)->required();
    tsm->add_option("--b", th.b)->required();
    tsm->callback([&] {
        echo_config({{"subcommand", "theory smooth"}, {"alpha", th.alpha}, {"r", th.r}, {"b", th.b}});
        std::printf("theta %.12g\n", smooth_cover_const(th.alpha, th.r, th.b));
    });

    auto* tcg = cth->add_subcommand("congestion", "congestion-priced cover constant");
    tcg->add_option("--C", th.C)->required();
    tcg->add_option("--F", th.F)->required();
    tcg->add_option("--r", th.r)->required();
    tcg->callback([&] {
        echo_config({{"subcommand", "theory congestion"}, {"C", th.C}, {"F", th.F}, {"r", th.r}});
        std::printf("theta %.12g\n", congestion_cover_const(th.C, th.F, th.r));
    });

    auto* tfl = cth->add_subcommand("flip", "flip-walk fixed point and theta");
    tfl->add_option("--q", th.q, "shorthand for r=1,b=2: rho_R=1-q, rho_B=q/2");
    tfl->add_option("--rho-r", th.rho_R);
    tfl->add_option("--rho-b", th.rho_B);
    tfl->add_option("--r", th.r);
    tfl->add_option("--b", th.b);
    tfl->callback([&] {
        double rr = th.rho_R, rb = th.rho_B;
        int r = th.r, b = th.b;
        if (th.q >= 0) {
            if (rr >= 0 || rb >= 0) throw parameter_error("--q excludes --rho-r/--rho-b");
            r = 1;
            b = 2;
            rr = 1.0 - th.q;
            rb = th.q / 2.0;
        }
        if (rr < 0 || rb < 0) throw parameter_error("flip needs --q or --rho-r/--rho-b");
        echo_config({{"subcommand", "theory flip"}, {"r", r}, {"b", b}, {"rho_R", rr}, {"rho_B", rb}});
        FlipSolution sol = flip_fixed_point(r, b, rr, rb);
        std::printf("psi_R %.12g\npsi_B %.12g\nf %.12g\nxi_R %.12g\nxi_B %.12g\n", sol.psi_R,
                    sol.psi_B, sol.f, sol.xi_R, sol.xi_B);
        std::printf("R_v %.12g\ntheta %.12g\nfeasible %d\n", sol.R_v, sol.R_v, int(sol.feasible));
        if (r == 1 && b == 2) {
            double q = 2.0 * rb;
            std::printf("theta_closed_form %.12g\nin_theorem_domain %d\n", theta_flip(q),
                        int(flip_q_in_theorem_domain(q)));
        }
    });

    auto* tsw = cth->add_subcommand("sweep-theta", "theta(q) curve as CSV");
    tsw->add_option("--from", th.from)->required();
    tsw->add_option("--to", th.to)->required();
    tsw->add_option("--steps", th.steps)->required();
    tsw->add_option("-o,--out", th.out);
    tsw->callback([&] {
        if (th.steps < 1) throw parameter_error("--steps must be >= 1");
        if (!(th.from > 0 && th.to < 1 && th.from <= th.to))
            throw parameter_error("need 0 < from <= to < 1");
        echo_config({{"subcommand", "theory sweep-theta"},
                     {"from", th.from},
                     {"to", th.to},
                     {"steps", th.steps},
                     {"out", th.out}});
        std::ofstream file;
        std::ostream& out = open_out(file, th.out);
        out << "q,theta,in_theorem_domain\n";
        for (int i = 0; i < th.steps; ++i) {
            double q = th.steps == 1
                           ? th.from
                           : th.from + (th.to - th.from) * double(i) / double(th.steps - 1);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g,%.10g,%d\n", q, theta_flip(q),
                          int(flip_q_in_theorem_domain(q)));
            out << buf;
        }
    });

    RunArgs run;
    auto* crun = app.add_subcommand("run", "one walk on a graph file, CSV row out");
    crun->add_option("--graph", run.graph, "graph file path")->required();
    run.pol.add_to(crun);
    crun->add_option("--seed", run.seed, "walk seed");
    crun->add_option("--start", run.start, "start vertex (default: seeded uniform)");
    crun->add_option("--step-cap", run.step_cap, "step cap (default 100 n^2)");
    crun->add_option("-o,--out", run.out, "output path (default stdout)");
    crun->callback([&] { cmd_run(run); });

    ExperimentArgs ex;
    auto* cexp = app.add_subcommand("experiment", "Monte Carlo campaign, CSV out");
    cexp->add_option("--kind", ex.kind, "cover|sweep|twofactor|returns|nonvisit")
        ->default_val("cover");
    cexp->add_option("--model", ex.model, "regular|union|hamilton|twofactor");
    cexp->add_option("--n", ex.n, "vertex count");
    cexp->add_option("--r", ex.r, "red degree");
    cexp->add_option("--b", ex.b, "blue degree (union model)");
    cexp->add_option("--d", ex.d, "degree (regular model)");
    cexp->add_option("--graph-seed", ex.graph_seed, "graph seed (default: master seed)")
        ->each([&](const std::string&) { ex.graph_seed_set = true; });
    cexp->add_option("--seed", ex.seed, "master seed for trial streams");
    cexp->add_option("--trials", ex.trials, "trials (or per sweep point)");
    cexp->add_option("--threads", ex.threads, "worker threads (env RBWALK_THREADS)");
    cexp->add_option("--step-cap", ex.step_cap, "step cap (default 100 n^2)");
    cexp->add_option("-o,--out", ex.out, "output path (default stdout)");
    ex.pol.add_to(cexp);
    cexp->add_option("--sweep-q", ex.sweep_q, "sweep: comma list of q values");
    cexp->add_option("--samples", ex.samples, "twofactor: sample count");
    cexp->add_option("--vertex", ex.vertex, "returns/nonvisit: target vertex");
    cexp->add_option("--t-grid", ex.t_grid, "nonvisit: comma list of steps");
    cexp->add_option("--horizon", ex.horizon, "returns: walk horizon (default 20 ln n)");
    cexp->callback([&] {
        if (ex.n <= 0) throw parameter_error("--n required");
        if (ex.kind == "cover") experiment_cover(ex);
        else if (ex.kind == "sweep") experiment_sweep(ex);
        else if (ex.kind == "twofactor") experiment_twofactor(ex);
        else if (ex.kind == "returns") experiment_returns(ex);
        else if (ex.kind == "nonvisit") experiment_nonvisit(ex);
        else throw parameter_error("unknown experiment kind: " + ex.kind);
    });

    std::string analyze_path;
    auto* cana = app.add_subcommand("analyze", "structure report for a graph file");
    cana->add_option("--graph", analyze_path, "graph file path")->required();
    cana->callback([&] { cmd_analyze(analyze_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
