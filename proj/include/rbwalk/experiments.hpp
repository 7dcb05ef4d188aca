#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rbwalk/graphgen.hpp"
#include "rbwalk/theory.hpp"
#include "rbwalk/walks.hpp"

namespace rbwalk {

struct ExperimentConfig {
    GraphSpec graph;
    WalkPolicy policy = Simple{};
    int64_t trials = 1;
    uint64_t master_seed = 0;
    int64_t step_cap = 0;                 // 0 -> default_step_cap(n)
    std::vector<int64_t> checkpoints;     // optional, sorted ascending
    int workers = 1;
};

struct TrialRow {
    int64_t trial = 0;
    uint64_t seed = 0;                    // derived stream seed, for exact rerun
    CoverResult result;
    std::vector<int64_t> unvisited;       // per checkpoint, if any
};

struct ExperimentResult {
    int n = 0, r = 0, b = 0;
    std::string policy;
    std::string param_json;
    int64_t trials = 0;
    uint64_t master_seed = 0;
    int64_t step_cap = 0;
    std::vector<TrialRow> rows;           // in trial order
    int64_t failures = 0;
    // aggregates over covered trials (NaN when none covered)
    double mean_cover = 0, std_cover = 0;
    int64_t min_cover = 0, max_cover = 0;
    double q10 = 0, q50 = 0, q90 = 0;
    double normalized = 0;                // mean / (n ln n)
    std::optional<double> theory_theta;   // predict()'s n ln n constant, when one exists
    std::optional<double> rel_deviation;  // (normalized - theta)/theta
};

// seeded parallel Monte Carlo; trial i uses the stream derived from
// (master_seed, i) and a uniform random start vertex, so aggregates are
// bit-identical for any worker count
ExperimentResult estimate_cover(const ExperimentConfig& cfg);

// empirical mean visits to each vertex of `vertices` by an all-edges walk
// started there, horizon T (the time-0 visit counts as 1)
std::vector<double> estimate_returns(const ColoredGraph& g, const std::vector<int>& vertices,
                                     int64_t horizon, int64_t trials, uint64_t master_seed,
                                     int workers);

struct NonvisitCurve {
    std::vector<int64_t> t;
    std::vector<double> empirical;   // fraction of trials with v unvisited during [t_mix, t]
    std::vector<double> stderr_;     // binomial standard error of that fraction
    std::vector<double> predicted;   // (1 + p_v)^{-t}
    double p_v = 0;
    int64_t t_mix = 0;               // ceil(10 ln n)
    bool v_tree_like = true;         // flagged, not enforced
};
NonvisitCurve nonvisit_curve(const ColoredGraph& g, int v, const std::vector<int64_t>& t_grid,
                             int64_t trials, uint64_t master_seed, int workers);

struct TwoFactorStats {
    int n = 0;
    int64_t samples = 0;
    std::vector<int> cycle_counts;                    // per sample
    std::vector<std::pair<int64_t, int64_t>> two_largest; // per sample (largest, second or 0)
    double frac_two_big = 0;     // fraction with >= 2 cycles of length >= n/ln^2 n
    int64_t within_3log2 = 0;    // samples with cycle count <= 3 log2 n
    int max_cycle_count = 0;
};
// samples random 2-factors directly (blue side only)
TwoFactorStats twofactor_stats(int n, int64_t samples, uint64_t seed);

struct ThetaSweepRow {
    double q = 0;
    double theory_theta = 0;
    double empirical_theta = 0;
    double stderr_ = 0;
    int64_t trials = 0;
    int n = 0;
    bool in_theorem_domain = true;
};
// Flip(1-q, q/2) cover campaigns on union r=1, b=2 graphs (one graph per
// grid point, seed derived from master_seed); n >= 10^4 enforced
std::vector<ThetaSweepRow> theta_sweep(const std::vector<double>& q_grid, int n,
                                       int64_t trials_per_point, uint64_t master_seed,
                                       int workers);

// one row per trial: trial,seed,n,r,b,policy,param_json,cover_time,red_uses,status
void write_trials_csv(std::ostream& out, const ExperimentResult& res);
// aggregate rows: q_or_alpha,theory_theta,empirical_theta,stderr,trials,n
void write_aggregate_csv_header(std::ostream& out);
void write_aggregate_row(std::ostream& out, const std::string& q_or_alpha,
                         std::optional<double> theory_theta, double empirical_theta,
                         double stderr_, int64_t trials, int n);

std::string policy_param_json(const WalkPolicy& p);

} // namespace rbwalk
