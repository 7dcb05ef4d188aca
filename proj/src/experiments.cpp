#include "rbwalk/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "rbwalk/errors.hpp"

namespace rbwalk {

namespace {

// trial-indexed work queue; fn(i) must touch only slot i of any shared output
void parallel_trials(int64_t trials, int workers, const std::function<void(int64_t)>& fn) {
    workers = int(std::min<int64_t>(std::max(workers, 1), trials));
    if (workers == 1) {
        for (int64_t i = 0; i < trials; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<bool> failed{false};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int64_t i = next.fetch_add(1);
                if (i >= trials || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed.load()) throw numeric_error("a trial worker failed");
}

double quantile_sorted(const std::vector<int64_t>& xs, double q) {
    if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
    double pos = q * double(xs.size() - 1);
    size_t lo = size_t(pos);
    size_t hi = std::min(lo + 1, xs.size() - 1);
    double frac = pos - double(lo);
    return double(xs[lo]) * (1.0 - frac) + double(xs[hi]) * frac;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

std::string policy_param_json(const WalkPolicy& p) {
    nlohmann::json j = nlohmann::json::object();
    if (auto* o = std::get_if<Oblivious>(&p)) {
        j["budget"] = o->budget;
    } else if (auto* f = std::get_if<Flip>(&p)) {
        j["rho_R"] = f->rho_R;
        j["rho_B"] = f->rho_B;
    } else if (auto* s = std::get_if<Smooth>(&p)) {
        j["alpha"] = s->alpha;
        j["phase_length"] = s->phase_length;
        j["budget"] = s->budget;
    } else if (auto* c = std::get_if<Congestion>(&p)) {
        j["C"] = c->C;
        j["F"] = c->F;
    }
    return j.dump();
}

ExperimentResult estimate_cover(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw parameter_error("trials >= 1 required");
    ColoredGraph g = build_graph(cfg.graph);
    if (!g.connected()) throw structure_error("generated graph is disconnected");
    validate_policy(cfg.policy, g.r(), g.b());
    if (!std::is_sorted(cfg.checkpoints.begin(), cfg.checkpoints.end()))
        throw parameter_error("checkpoints must be sorted ascending");

    // resolve defaults once so every trial and the report agree
    WalkPolicy policy = cfg.policy;
    if (auto* s = std::get_if<Smooth>(&policy)) {
        if (s->phase_length <= 0) s->phase_length = default_phase_length(g.n());
        if (s->budget < 0) s->budget = smooth_default_budget(s->alpha, g.r(), g.b(), g.n());
    }
    const int64_t step_cap = cfg.step_cap > 0 ? cfg.step_cap : default_step_cap(g.n());

    ExperimentResult res;
    res.n = g.n();
    res.r = g.r();
    res.b = g.b();
    res.policy = policy_name(policy);
    res.param_json = policy_param_json(policy);
    res.trials = cfg.trials;
    res.master_seed = cfg.master_seed;
    res.step_cap = step_cap;
    res.rows.resize(size_t(cfg.trials));

    const bool want_cp = !cfg.checkpoints.empty();
    parallel_trials(cfg.trials, cfg.workers, [&](int64_t i) {
        Rng rng = trial_rng(cfg.master_seed, uint64_t(i));
        int start = int(rng.below(uint32_t(g.n())));
        TrialRow& row = res.rows[size_t(i)];
        row.trial = i;
        row.seed = trial_seed(cfg.master_seed, uint64_t(i));
        if (want_cp) {
            auto cp = run_with_checkpoints(g, policy, start, rng, step_cap, cfg.checkpoints);
            row.result = cp.result;
            row.unvisited = std::move(cp.unvisited);
        } else {
            row.result = run_cover(g, policy, start, rng, step_cap);
        }
    });

    std::vector<int64_t> covered;
    covered.reserve(res.rows.size());
    for (const auto& row : res.rows)
        if (row.result.covered())
            covered.push_back(row.result.cover_time);
        else
            ++res.failures;
    std::sort(covered.begin(), covered.end());

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (covered.empty()) {
        res.mean_cover = res.std_cover = res.normalized = nan;
        res.q10 = res.q50 = res.q90 = nan;
        res.min_cover = res.max_cover = 0;
    } else {
        double sum = 0;
        for (int64_t c : covered) sum += double(c);
        res.mean_cover = sum / double(covered.size());
        double ss = 0;
        for (int64_t c : covered) {
            double d = double(c) - res.mean_cover;
            ss += d * d;
        }
        res.std_cover = covered.size() > 1 ? std::sqrt(ss / double(covered.size() - 1)) : 0.0;
        res.min_cover = covered.front();
        res.max_cover = covered.back();
        res.q10 = quantile_sorted(covered, 0.10);
        res.q50 = quantile_sorted(covered, 0.50);
        res.q90 = quantile_sorted(covered, 0.90);
        res.normalized = res.mean_cover / (double(g.n()) * std::log(double(g.n())));
    }

    try {
        CoverConstant cc = predict(cfg.graph.model, g.r(), g.b(), g.n(), policy);
        if (cc.law == CoverLaw::NLogN) {
            res.theory_theta = cc.theta;
            if (!covered.empty())
                res.rel_deviation = (res.normalized - cc.theta) / cc.theta;
        }
    } catch (const parameter_error&) {
        // no prediction for this combination; leave the optionals empty
    }
    return res;
}

std::vector<double> estimate_returns(const ColoredGraph& g, const std::vector<int>& vertices,
                                     int64_t horizon, int64_t trials, uint64_t master_seed,
                                     int workers) {
    if (horizon < 0) throw parameter_error("horizon must be >= 0");
    if (trials < 1) throw parameter_error("trials >= 1 required");
    for (int v : vertices)
        if (v < 0 || v >= g.n()) throw parameter_error("vertex out of range");
    const int deg = g.degree();
    std::vector<double> out(vertices.size(), 0.0);
    for (size_t vi = 0; vi < vertices.size(); ++vi) {
        const int v0 = vertices[vi];
        std::vector<int64_t> visits(size_t(trials), 0);
        parallel_trials(trials, workers, [&](int64_t i) {
            Rng rng = trial_rng(master_seed + vi, uint64_t(i));
            int v = v0;
            int64_t count = 1; // the visit at time 0
            for (int64_t t = 1; t <= horizon; ++t) {
                v = g.neighbor(v, int(rng.below(uint32_t(deg))));
                if (v == v0) ++count;
            }
            visits[size_t(i)] = count;
        });
        double sum = 0;
        for (int64_t c : visits) sum += double(c);
        out[vi] = sum / double(trials);
    }
    return out;
}

NonvisitCurve nonvisit_curve(const ColoredGraph& g, int v, const std::vector<int64_t>& t_grid,
                             int64_t trials, uint64_t master_seed, int workers) {
    if (v < 0 || v >= g.n()) throw parameter_error("vertex out of range");
    if (t_grid.empty()) throw parameter_error("empty t grid");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw parameter_error("t grid must be sorted ascending");
    if (trials < 1) throw parameter_error("trials >= 1 required");

    NonvisitCurve curve;
    curve.t = t_grid;
    curve.t_mix = int64_t(std::ceil(10.0 * std::log(double(g.n()))));
    const int64_t t_max = t_grid.back();

    int sigma = small_cycle_sigma(g.n());
    curve.v_tree_like = locally_tree_like(g, sigma)[size_t(v)] != 0;

    double R = returns_tree(g.degree());
    curve.p_v = visit_rate(1.0 / double(g.n()), R);

    // per trial: first time the walk sits on v at a step >= t_mix (stationary
    // uniform start); kFailed means unvisited through t_max
    std::vector<int64_t> first(size_t(trials), 0);
    parallel_trials(trials, workers, [&](int64_t i) {
        Rng rng = trial_rng(master_seed, uint64_t(i));
        int start = int(rng.below(uint32_t(g.n())));
        first[size_t(i)] = first_visit_after(g, start, v, curve.t_mix, t_max, rng);
    });

    for (int64_t t : t_grid) {
        int64_t unvisited = 0;
        for (int64_t f : first)
            if (f == kFailed || f > t) ++unvisited;
        double p = double(unvisited) / double(trials);
        curve.empirical.push_back(p);
        curve.stderr_.push_back(std::sqrt(std::max(p * (1.0 - p), 0.0) / double(trials)));
        curve.predicted.push_back(nonvisit_prob(curve.p_v, double(t)));
    }
    return curve;
}

TwoFactorStats twofactor_stats(int n, int64_t samples, uint64_t seed) {
    if (n < 3) throw parameter_error("n >= 3 required");
    if (samples < 1) throw parameter_error("samples >= 1 required");
    TwoFactorStats st;
    st.n = n;
    st.samples = samples;
    double ln = std::log(double(n));
    const double big = double(n) / (ln * ln);
    const double cap = 3.0 * std::log2(double(n));
    int64_t big_ok = 0;
    for (int64_t i = 0; i < samples; ++i) {
        Rng rng = trial_rng(seed, uint64_t(i));
        auto edges = config_regular_edges(n, 2, rng, Color::Blue);
        ColoredGraph f(n, 0, 2, std::move(edges));
        auto lens = f.blue_cycle_lengths(); // sorted ascending
        st.cycle_counts.push_back(int(lens.size()));
        int64_t largest = lens.back();
        int64_t second = lens.size() >= 2 ? lens[lens.size() - 2] : 0;
        st.two_largest.push_back({largest, second});
        if (lens.size() >= 2 && double(second) >= big) ++big_ok;
        if (double(lens.size()) <= cap) ++st.within_3log2;
        st.max_cycle_count = std::max(st.max_cycle_count, int(lens.size()));
    }
    st.frac_two_big = double(big_ok) / double(samples);
    return st;
}

std::vector<ThetaSweepRow> theta_sweep(const std::vector<double>& q_grid, int n,
                                       int64_t trials_per_point, uint64_t master_seed,
                                       int workers) {
    if (n < 10000) throw parameter_error("theta sweep needs n >= 10^4");
    if (trials_per_point < 1) throw parameter_error("trials >= 1 required");
    if (q_grid.empty()) throw parameter_error("empty q grid");
    for (double q : q_grid)
        if (!(q > 0.0 && q < 1.0)) throw parameter_error("sweep q must lie in (0,1)");

    std::vector<ThetaSweepRow> rows;
    rows.reserve(q_grid.size());
    const double nln = double(n) * std::log(double(n));
    for (size_t i = 0; i < q_grid.size(); ++i) {
        double q = q_grid[i];
        ExperimentConfig cfg;
        cfg.graph = {GraphModel::Union, n, 1, 2, trial_seed(master_seed, 2 * i)};
        cfg.policy = Flip{1.0 - q, q / 2.0};
        cfg.trials = trials_per_point;
        cfg.master_seed = trial_seed(master_seed, 2 * i + 1);
        cfg.workers = workers;
        ExperimentResult res = estimate_cover(cfg);
        ThetaSweepRow row;
        row.q = q;
        row.theory_theta = theta_flip(q);
        row.empirical_theta = res.normalized;
        row.stderr_ = res.std_cover / (std::sqrt(double(trials_per_point)) * nln);
        row.trials = trials_per_point;
        row.n = n;
        row.in_theorem_domain = flip_q_in_theorem_domain(q);
        rows.push_back(row);
    }
    return rows;
}

void write_trials_csv(std::ostream& out, const ExperimentResult& res) {
    out << "trial,seed,n,r,b,policy,param_json,cover_time,red_uses,status\n";
    // param_json is CSV-quoted (RFC 4180: wrap in quotes, double inner quotes)
    std::string quoted = "\"";
    for (char c : res.param_json) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    for (const auto& row : res.rows) {
        out << row.trial << ',' << row.seed << ',' << res.n << ',' << res.r << ',' << res.b
            << ',' << res.policy << ',' << quoted << ',';
        if (row.result.covered()) out << row.result.cover_time;
        out << ',' << row.result.red_uses << ','
            << (row.result.covered() ? "covered" : "failed") << '\n';
    }
}

void write_aggregate_csv_header(std::ostream& out) {
    out << "q_or_alpha,theory_theta,empirical_theta,stderr,trials,n\n";
}

void write_aggregate_row(std::ostream& out, const std::string& q_or_alpha,
                         std::optional<double> theory_theta, double empirical_theta,
                         double stderr_, int64_t trials, int n) {
    out << q_or_alpha << ',';
    if (theory_theta) out << format_double(*theory_theta);
    out << ',' << format_double(empirical_theta) << ',' << format_double(stderr_) << ','
        << trials << ',' << n << '\n';
}

} // namespace rbwalk
