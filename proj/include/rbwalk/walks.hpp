#pragma once
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "rbwalk/graph.hpp"
#include "rbwalk/rng.hpp"

namespace rbwalk {

struct Simple {};
// budget = number of red-edge traversals allowed; all-edges walk until the
// budget is spent, blue-only forever after
struct Oblivious {
    int64_t budget = 0;
};
// every step: a given red edge with probability rho_R, a given blue edge
// with probability rho_B (r*rho_R + b*rho_B = 1); red use unbounded
struct Flip {
    double rho_R = 0.0, rho_B = 0.0;
};
// alternating phases: even phases all-edges, odd phases blue-only; switches
// to blue forever once the all-edges step count reaches ceil(alpha *
// sigma_RB * n * ln n) or the red budget is spent
struct Smooth {
    double alpha = 0.5;
    int64_t phase_length = 0; // 0 -> default_phase_length(n)
    int64_t budget = -1;      // -1 -> smooth_default_budget(alpha, r, b, n)
};
// repeating super-period: C peak steps (blue-only) then F free steps (all
// edges); starts at a peak; red use unbounded
struct Congestion {
    int64_t C = 0, F = 1;
};

using WalkPolicy = std::variant<Simple, Oblivious, Flip, Smooth, Congestion>;

// throws parameter_error on a violated policy invariant for degree pair (r, b)
void validate_policy(const WalkPolicy& p, int r, int b);

const char* policy_name(const WalkPolicy& p);

int64_t default_step_cap(int n);                 // 100 n^2
int64_t default_phase_length(int n);             // ceil(ln^2 n * ln ln n)
int64_t smooth_rb_step_target(double alpha, int r, int b, int n); // ceil(alpha sigma_RB n ln n)
int64_t smooth_default_budget(double alpha, int r, int b, int n); // ceil(gamma(alpha) n ln n)

inline constexpr int64_t kFailed = -1;

struct CoverResult {
    int64_t cover_time = kFailed; // first step with all n vertices visited; kFailed if capped
    int64_t red_uses = 0;
    int64_t steps_taken = 0;
    int32_t start_vertex = 0;
    bool covered() const { return cover_time >= 0; }
};

enum class StepMode { AllEdges, BlueOnly };

// one transition; returns (next vertex, red edge used)
std::pair<int32_t, bool> step(const ColoredGraph& g, int v, StepMode mode, Rng& rng);
std::pair<int32_t, bool> step_flip(const ColoredGraph& g, int v, double rho_R, Rng& rng);

CoverResult run_cover(const ColoredGraph& g, const WalkPolicy& policy, int start,
                      Rng& rng, int64_t step_cap);

// run_cover plus the final coverage bitmap and the walker's position when
// the outcome was decided (used to cross-check failed runs against the
// terminal blue component)
struct CoverTrace {
    CoverResult result;
    std::vector<char> visited;
    int32_t end_vertex = 0;
};
CoverTrace run_cover_trace(const ColoredGraph& g, const WalkPolicy& policy, int start,
                           Rng& rng, int64_t step_cap);

// unvisited-vertex counts sampled at the given (sorted ascending) steps;
// checkpoints past termination report the terminal count
struct CheckpointedResult {
    CoverResult result;
    std::vector<int64_t> unvisited;
};
CheckpointedResult run_with_checkpoints(const ColoredGraph& g, const WalkPolicy& policy,
                                        int start, Rng& rng, int64_t step_cap,
                                        const std::vector<int64_t>& checkpoints);

// first step >= t_min at which the walk sits on `target`, or kFailed if none
// within the horizon; the walk is unconstrained-simple (all edges)
int64_t first_visit_after(const ColoredGraph& g, int start, int target,
                          int64_t t_min, int64_t horizon, Rng& rng);

} // namespace rbwalk
