// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line with its measured numbers; the process exit code is the failure count.
// Criterion 8 is known to fail its first clause: the per-step visit-rate law
// is an n -> infinity statement and at n=100 the killed-chain survival still
// sits ~6-10% away (the gap scales like t/n * 1/n corrections; by n=4096 the
// same check passes, see the unit suite). It is reported honestly rather than
// widened away.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rbwalk/experiments.hpp"
#include "rbwalk/graphgen.hpp"
#include "rbwalk/theory.hpp"
#include "rbwalk/walks.hpp"

using namespace rbwalk;

namespace {

int report(int k, bool pass, const std::string& detail) {
    std::printf("criterion %02d %s  %s\n", k, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    return pass ? 0 : 1;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

int64_t converted_budget(double frac, int r, int b, int n) {
    return int64_t(std::ceil(frac * sigma_rb(r, b) * double(r) / (r + b) * n * std::log(double(n))));
}

// 1: unconstrained walk on a random 3-regular graph covers in ~2 n ln n
int criterion_1() {
    ExperimentConfig cfg;
    cfg.graph = {GraphModel::Regular, 20000, 0, 3, 101};
    cfg.trials = 20;
    cfg.master_seed = 1001;
    ExperimentResult res = estimate_cover(cfg);
    const bool pass = res.failures == 0 && res.normalized >= 1.85 && res.normalized <= 2.15;
    return report(1, pass,
                  fmt("simple cover on 3-regular n=20000: mean/(n ln n) = %.4f "
                      "(band [1.85, 2.15], %lld/%lld covered)",
                      res.normalized, (long long)(res.trials - res.failures),
                      (long long)res.trials));
}

// 2: empirical theta(q) tracks the closed form and is minimized at q = 2/3
int criterion_2() {
    const std::vector<double> qs = {0.5, 2.0 / 3, 0.9};
    auto rows = theta_sweep(qs, 20000, 20, 1002, 1);
    bool pass = true;
    std::string detail = "flip sweep n=20000:";
    for (const auto& r : rows) {
        const double dev = std::abs(r.empirical_theta - r.theory_theta) / r.theory_theta;
        pass = pass && dev <= 0.10;
        detail += fmt(" q=%.3f emp=%.3f th=%.3f dev=%.1f%%;", r.q, r.empirical_theta,
                      r.theory_theta, 100 * dev);
    }
    const bool min_mid = rows[1].empirical_theta < rows[0].empirical_theta &&
                         rows[1].empirical_theta < rows[2].empirical_theta;
    pass = pass && min_mid;
    detail += min_mid ? " min at q=2/3" : " MIN NOT AT q=2/3";
    return report(2, pass, detail);
}

// 3: fixed point, closed-form theta and cubic roots agree to tight tolerance
int criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_res = 0, worst_theta = 0, worst_psi = 0;
    for (int i = 0; i < 50; ++i) {
        const double q = 2.0 / 3 + (0.99 - 2.0 / 3) * i / 49.0;
        FlipSolution s = flip_fixed_point(1, 2, 1 - q, q / 2);
        worst_res = std::max(worst_res, s.residual);
        worst_theta = std::max(worst_theta, std::abs(1.0 / (1.0 - s.f) - theta_flip(q)));
        worst_psi = std::max(worst_psi, std::abs(s.psi_B - (1.0 - flip_roots_b2(q).w_plus)));
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass =
        worst_res <= 1e-10 && worst_theta <= 1e-8 && worst_psi <= 1e-10 && sec < 1.0;
    return report(3, pass,
                  fmt("50-point q grid: max residual %.2e, |1/(1-f)-theta| %.2e, "
                      "|psi_B-(1-w+)| %.2e, %.3fs",
                      worst_res, worst_theta, worst_psi, sec));
}

// 4: budgeted walk on the hamilton union collapses to ~n^2/2 but still covers
int criterion_4() {
    const int n = 2000;
    const int64_t budget = converted_budget(0.8, 1, 2, n);
    ExperimentConfig cfg;
    cfg.graph = {GraphModel::Hamilton, n, 1, 2, 104};
    cfg.policy = Oblivious{budget};
    cfg.trials = 10;
    cfg.master_seed = 1004;
    ExperimentResult res = estimate_cover(cfg);
    ExperimentConfig base = cfg;
    base.policy = Simple{};
    base.master_seed = 2004;
    ExperimentResult free_walk = estimate_cover(base);
    const double lo = double(n) * n / 6, hi = 1.5 * double(n) * n;
    const double ratio = res.mean_cover / free_walk.mean_cover;
    const bool pass = res.failures == 0 && res.mean_cover >= lo && res.mean_cover <= hi &&
                      ratio >= 20.0;
    return report(4, pass,
                  fmt("hamilton n=2000 budget=%lld: mean cover %.3g (band [%.3g, %.3g]), "
                      "x%.1f over unconstrained %.3g, %lld/10 covered",
                      (long long)budget, res.mean_cover, lo, hi, ratio, free_walk.mean_cover,
                      (long long)(res.trials - res.failures)));
}

// 5: same budget on the two-factor union strands the walk outside its final
// blue component
int criterion_5() {
    const int n = 2000;
    const int64_t budget = converted_budget(0.8, 1, 2, n);
    GraphSpec spec{GraphModel::TwoFactor, n, 1, 2, 105};
    ColoredGraph g = build_graph(spec);
    const int64_t cap = default_step_cap(n);
    const uint64_t master = 1005;
    int failed = 0, contained = 0;
    for (int64_t i = 0; i < 10; ++i) {
        Rng rng = trial_rng(master, i);
        const int start = int(rng.below(uint32_t(n)));
        CoverTrace tr = run_cover_trace(g, Oblivious{budget}, start, rng, cap);
        if (tr.result.covered()) continue;
        ++failed;
        auto comp = g.blue_component(tr.end_vertex);
        std::set<int32_t> comp_set(comp.begin(), comp.end());
        bool ok = true;
        for (int v = 0; v < n; ++v)
            if (!tr.visited[size_t(v)] && comp_set.count(v)) ok = false;
        if (ok) ++contained;
    }
    const bool pass = failed >= 1 && contained == failed;
    return report(5, pass,
                  fmt("two-factor n=2000 budget=%lld: %d/10 trials failed, %d/%d failures "
                      "have all unvisited vertices outside the final blue component",
                      (long long)budget, failed, contained, failed));
}

// 6: smooth-walk and flip-walk cover laws hit their predicted constants
int criterion_6() {
    ExperimentConfig sm;
    sm.graph = {GraphModel::Union, 20000, 1, 3, 106};
    sm.policy = Smooth{0.5};
    sm.trials = 10;
    sm.master_seed = 1006;
    ExperimentResult rs = estimate_cover(sm);
    double red_mean = 0;
    for (const auto& row : rs.rows) red_mean += double(row.result.red_uses);
    red_mean /= double(rs.rows.size());
    const double red_target = gamma_budget(0.5, 1, 3) * 20000 * std::log(20000.0);
    const double sm_dev = std::abs(rs.normalized - 1.75) / 1.75;
    const double red_dev = std::abs(red_mean - red_target) / red_target;

    ExperimentConfig fl;
    fl.graph = {GraphModel::Union, 20000, 2, 2, 116};
    fl.policy = Flip{0.15, 0.35};
    fl.trials = 10;
    fl.master_seed = 1016;
    ExperimentResult rf = estimate_cover(fl);
    const double theta = flip_fixed_point(2, 2, 0.15, 0.35).R_v;
    const double fl_dev = std::abs(rf.normalized - theta) / theta;

    const bool pass = rs.failures == 0 && sm_dev <= 0.15 && red_dev <= 0.20 &&
                      rf.failures == 0 && fl_dev <= 0.15;
    return report(6, pass,
                  fmt("smooth(0.5) r=1 b=3: norm %.3f vs 1.75 (dev %.1f%%), red %.0f vs "
                      "%.0f (dev %.1f%%); flip(.15,.35) r=b=2: norm %.3f vs %.4f "
                      "(dev %.1f%%)",
                      rs.normalized, 100 * sm_dev, red_mean, red_target, 100 * red_dev,
                      rf.normalized, theta, 100 * fl_dev));
}

// 7: congestion-priced walk pays the (1 + C/F) factor
int criterion_7() {
    ExperimentConfig cfg;
    cfg.graph = {GraphModel::Hamilton, 20000, 1, 2, 107};
    cfg.policy = Congestion{5000, 5000};
    cfg.trials = 10;
    cfg.master_seed = 1007;
    ExperimentResult res = estimate_cover(cfg);
    const double dev = std::abs(res.normalized - 4.0) / 4.0;
    const bool pass = res.failures == 0 && dev <= 0.15;
    return report(7, pass,
                  fmt("congestion C=F=5000 hamilton n=20000: norm %.3f vs 4.0 (dev %.1f%%)",
                      res.normalized, 100 * dev));
}

// 8: the per-step visit-rate law against the killed chain (n=100), plus the
// empirical return count at n=10^4
int criterion_8() {
    const int n = 100;
    ColoredGraph g = build_graph({GraphModel::Regular, n, 0, 3, 108});
    const double p = visit_rate(1.0 / n, returns_tree(3));
    auto surv = oracles::nonvisit_survival_stationary(g, 0, 20 * n);
    double worst = 0;
    for (int64_t t = 5 * n; t <= 20 * n; t += n)
        worst = std::max(worst,
                         std::abs(nonvisit_prob(p, t) - surv[size_t(t)]) / surv[size_t(t)]);
    const bool part_a = worst <= 0.05;

    const int nb = 10000;
    ColoredGraph gb = build_graph({GraphModel::Regular, nb, 0, 3, 118});
    const int64_t horizon = int64_t(std::ceil(20 * std::log(double(nb))));
    const double ret = estimate_returns(gb, {0}, horizon, 10000, 1008, 1)[0];
    const bool part_b = ret >= 1.9 && ret <= 2.1;

    return report(8, part_a && part_b,
                  fmt("visit-rate law vs killed chain at n=100: max dev %.1f%% over "
                      "t in [5n,20n] (need <=5%%; an asymptotic law, passes at n=4096 in "
                      "the unit suite); empirical returns at n=10^4: %.3f (band [1.9,2.1])",
                      100 * worst, ret));
}

// 9: exact small-chain means and the zero-budget/blue-only equivalence
int criterion_9() {
    ColoredGraph tri = helpers::make_triangle();
    const double tri_exact = oracles::exact_cover_uniform_start(oracles::slot_adjacency(tri));
    double tri_mean = 0;
    const int NT = 100000;
    for (int i = 0; i < NT; ++i) {
        Rng rng = trial_rng(1009, i);
        tri_mean += double(run_cover(tri, Simple{}, int(rng.below(3)), rng, 100000).cover_time);
    }
    tri_mean /= NT;
    const bool tri_ok =
        std::abs(tri_exact - 3.0) < 1e-9 && std::abs(tri_mean - 3.0) / 3.0 <= 0.02;

    ColoredGraph c100 = helpers::make_cycle(100);
    const double cyc_exact = oracles::exact_cycle_cover(100);
    double cyc_mean = 0;
    const int NC = 2000;
    for (int i = 0; i < NC; ++i) {
        Rng rng = trial_rng(2009, i);
        cyc_mean +=
            double(run_cover(c100, Simple{}, int(rng.below(100)), rng, 10000000).cover_time);
    }
    cyc_mean /= NC;
    const bool cyc_ok = std::abs(cyc_exact - 4950.0) < 1e-6 &&
                        std::abs(cyc_mean - cyc_exact) / cyc_exact <= 0.05;

    // zero-budget oblivious is the blue-only walk, literally and in law
    bool equal = true;
    int64_t reds = 0;
    int64_t slot_counts[2] = {0, 0};
    int64_t drawn = 0;
    for (uint64_t seed = 0; seed < 10000 && equal; ++seed) {
        Rng a(seed), b(seed);
        CoverTrace tr = run_cover_trace(c100, Oblivious{0}, 0, a, 300);
        reds += tr.result.red_uses;
        int32_t v = 0;
        for (int t = 0; t < 300; ++t) {
            const uint32_t slot = b.below(2);
            if (drawn < 1000000) {
                ++slot_counts[slot];
                ++drawn;
            }
            v = c100.neighbor(v, int(slot));
        }
        // walks that covered early stopped consuming randomness; only compare
        // full-length paths
        if (tr.result.cover_time == kFailed && tr.end_vertex != v) equal = false;
    }
    const double e = double(drawn) / 2;
    const double chi2 = (slot_counts[0] - e) * (slot_counts[0] - e) / e +
                        (slot_counts[1] - e) * (slot_counts[1] - e) / e;
    const bool blue_ok = equal && reds == 0 && chi2 < oracles::kChi2Crit1;

    return report(9, tri_ok && cyc_ok && blue_ok,
                  fmt("triangle mean %.4f (exact 3), C100 mean %.1f (exact %.0f), "
                      "zero-budget==blue-only: paths %s, red_uses %lld, slot chi2 %.2f "
                      "(crit %.2f)",
                      tri_mean, cyc_mean, cyc_exact, equal ? "identical" : "DIVERGED",
                      (long long)reds, chi2, oracles::kChi2Crit1));
}

// 10: random 2-factors have two big cycles and few cycles overall
int criterion_10() {
    TwoFactorStats st = twofactor_stats(100000, 100, 110);
    const bool pass = st.frac_two_big >= 0.90 && st.within_3log2 >= 99;
    return report(10, pass,
                  fmt("2-factor n=10^5, 100 samples: %.0f%% with two cycles >= n/ln^2 n, "
                      "%lld/100 with <= 3 log2 n cycles, max count %lld",
                      100 * st.frac_two_big, (long long)st.within_3log2,
                      (long long)st.max_cycle_count));
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    int (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                           criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    int failures = 0;
    for (int k = 1; k <= 10; ++k) {
        if (only != 0 && only != k) continue;
        failures += criteria[k - 1]();
    }
    if (only == 0)
        std::printf("%s: %d/10 criteria passed\n", failures == 0 ? "ALL PASS" : "SOME FAILED",
                    10 - failures);
    return failures;
}
