#include "rbwalk/walks.hpp"

#include <algorithm>
#include <cmath>

#include "rbwalk/errors.hpp"

namespace rbwalk {

int64_t default_step_cap(int n) { return 100LL * n * n; }

int64_t default_phase_length(int n) {
    double ln = std::log(double(n));
    double v = ln * ln * std::log(std::max(std::exp(1.0), ln));
    return std::max<int64_t>(1, int64_t(std::ceil(v)));
}

static double sigma_rb_local(int r, int b) { return double(r + b - 1) / double(r + b - 2); }

int64_t smooth_rb_step_target(double alpha, int r, int b, int n) {
    double v = alpha * sigma_rb_local(r, b) * double(n) * std::log(double(n));
    return int64_t(std::ceil(v));
}

int64_t smooth_default_budget(double alpha, int r, int b, int n) {
    double gamma = alpha * sigma_rb_local(r, b) * double(r) / double(r + b);
    return int64_t(std::ceil(gamma * double(n) * std::log(double(n))));
}

void validate_policy(const WalkPolicy& p, int r, int b) {
    if (std::holds_alternative<Oblivious>(p)) {
        if (std::get<Oblivious>(p).budget < 0) throw parameter_error("oblivious budget must be >= 0");
    } else if (std::holds_alternative<Flip>(p)) {
        auto f = std::get<Flip>(p);
        if (!(f.rho_R > 0) || !(f.rho_B > 0))
            throw parameter_error("flip probabilities must be positive");
        double s = r * f.rho_R + b * f.rho_B;
        if (std::abs(s - 1.0) > 1e-12)
            throw parameter_error("flip probabilities must satisfy r*rho_R + b*rho_B = 1");
        // rho_R <= rho_B is the flip theorem's hypothesis, not a walk
        // precondition; the stationary kernel exists either way
    } else if (std::holds_alternative<Smooth>(p)) {
        auto s = std::get<Smooth>(p);
        if (!(s.alpha >= 0.0 && s.alpha <= 1.0)) throw parameter_error("smooth alpha must be in [0,1]");
        if (s.phase_length < 0) throw parameter_error("smooth phase_length must be >= 1 (0 = default)");
        if (b < 1) throw parameter_error("smooth walk needs blue edges");
    } else if (std::holds_alternative<Congestion>(p)) {
        auto c = std::get<Congestion>(p);
        if (c.C < 0) throw parameter_error("congestion C must be >= 0");
        if (c.F < 1) throw parameter_error("congestion F must be >= 1");
    }
    if (std::holds_alternative<Oblivious>(p) || std::holds_alternative<Smooth>(p))
        if (b < 1) throw parameter_error("budgeted policies need blue edges");
    if (r + b < 1) throw parameter_error("graph has no edges");
}

const char* policy_name(const WalkPolicy& p) {
    switch (p.index()) {
        case 0: return "simple";
        case 1: return "oblivious";
        case 2: return "flip";
        case 3: return "smooth";
        case 4: return "congestion";
    }
    return "?";
}

std::pair<int32_t, bool> step(const ColoredGraph& g, int v, StepMode mode, Rng& rng) {
    int r = g.r(), deg = g.degree();
    int slot = (mode == StepMode::AllEdges) ? int(rng.below(uint32_t(deg)))
                                            : r + int(rng.below(uint32_t(deg - r)));
    return {g.neighbor(v, slot), slot < r};
}

std::pair<int32_t, bool> step_flip(const ColoredGraph& g, int v, double rho_R, Rng& rng) {
    int r = g.r(), b = g.b();
    if (rng.uniform01() < double(r) * rho_R) return {g.neighbor(v, int(rng.below(uint32_t(r)))), true};
    return {g.neighbor(v, r + int(rng.below(uint32_t(b)))), false};
}

namespace {

// Shared trajectory driver. Policy logic is a per-step mode decision plus
// red-use accounting; Visit is called on every first visit, Tick after every
// step (for checkpoint sampling).
struct RunState {
    int64_t cover_time = kFailed;
    int64_t red_uses = 0;
    int64_t steps = 0;
    int32_t end_vertex = 0;
    std::vector<char> visited;
    bool frozen = false; // blue-forever regime proven unable to cover
};

enum class PolKind { Simple, Oblivious, Flip, Smooth, Congestion };

struct PolicyState {
    PolKind kind = PolKind::Simple;
    // oblivious / smooth
    int64_t budget = 0;
    // flip
    double red_prob = 0; // r * rho_R
    // smooth
    int64_t phase_length = 1;
    int64_t rb_target = 0;
    int64_t rb_steps = 0;
    int64_t phase_pos = 0;
    bool phase_blue = false;  // current phase parity
    bool blue_forever = false;
    // congestion
    int64_t C = 0, period = 1;
};

PolicyState make_state(const ColoredGraph& g, const WalkPolicy& p) {
    PolicyState st;
    if (auto* o = std::get_if<Oblivious>(&p)) {
        st.kind = PolKind::Oblivious;
        st.budget = o->budget;
    } else if (auto* f = std::get_if<Flip>(&p)) {
        st.kind = PolKind::Flip;
        st.red_prob = double(g.r()) * f->rho_R;
    } else if (auto* s = std::get_if<Smooth>(&p)) {
        st.kind = PolKind::Smooth;
        st.phase_length = s->phase_length > 0 ? s->phase_length : default_phase_length(g.n());
        st.budget = s->budget >= 0 ? s->budget
                                   : smooth_default_budget(s->alpha, g.r(), g.b(), g.n());
        st.rb_target = smooth_rb_step_target(s->alpha, g.r(), g.b(), g.n());
    } else if (auto* c = std::get_if<Congestion>(&p)) {
        st.kind = PolKind::Congestion;
        st.C = c->C;
        st.period = c->C + c->F;
    }
    return st;
}

// Returns true when the walk has just entered an irreversible blue-only
// regime (used to arm the failed-run shortcut).
inline bool irreversibly_blue(const PolicyState& st, int64_t red_uses) {
    if (st.kind == PolKind::Oblivious) return red_uses >= st.budget;
    if (st.kind == PolKind::Smooth) return st.blue_forever;
    return false;
}

template <bool kWantCheckpoints>
RunState run_walk(const ColoredGraph& g, const WalkPolicy& policy, int start, Rng& rng,
                  int64_t step_cap, const std::vector<int64_t>* checkpoints,
                  std::vector<int64_t>* unvisited_out) {
    const int n = g.n(), r = g.r(), deg = g.degree();
    const int blue = deg - r;
    if (start < 0 || start >= n) throw parameter_error("start vertex out of range");
    if (step_cap < 1) throw parameter_error("step_cap must be >= 1");
    validate_policy(policy, r, g.b());

    PolicyState st = make_state(g, policy);
    if ((st.kind == PolKind::Oblivious || st.kind == PolKind::Smooth ||
         st.kind == PolKind::Congestion) && blue == 0)
        throw parameter_error("policy needs blue edges");

    RunState rs;
    rs.visited.assign(n, 0);
    rs.visited[start] = 1;
    int64_t unvisited = n - 1;
    int v = start;

    size_t cp_idx = 0;
    auto tick_checkpoints = [&](int64_t t) {
        if constexpr (kWantCheckpoints) {
            while (cp_idx < checkpoints->size() && (*checkpoints)[cp_idx] == t) {
                unvisited_out->push_back(unvisited);
                ++cp_idx;
            }
        }
    };
    tick_checkpoints(0);

    // armed once the walk can never leave the current blue component:
    // reachable = unvisited vertices inside it; when that hits zero while
    // unvisited remains, every later observable is already determined and
    // the loop is skipped to the cap
    bool shortcut_armed = false;
    int64_t reachable = -1;
    auto arm_shortcut = [&]() {
        if (shortcut_armed) return;
        shortcut_armed = true;
        reachable = 0;
        for (int32_t w : g.blue_component(v))
            if (!rs.visited[w]) ++reachable;
    };
    if (unvisited == 0) {
        rs.cover_time = 0;
        rs.steps = 0;
        rs.end_vertex = int32_t(v);
        if constexpr (kWantCheckpoints)
            while (cp_idx < checkpoints->size()) {
                unvisited_out->push_back(0);
                ++cp_idx;
            }
        return rs;
    }
    if (irreversibly_blue(st, 0)) arm_shortcut();

    const int32_t* nbr = g.row(0);
    int64_t t = 0;
    while (t < step_cap) {
        ++t;
        bool red_step = false;
        int slot;
        switch (st.kind) {
            case PolKind::Simple:
                slot = int(rng.below(uint32_t(deg)));
                break;
            case PolKind::Oblivious:
                slot = (rs.red_uses < st.budget) ? int(rng.below(uint32_t(deg)))
                                                 : r + int(rng.below(uint32_t(blue)));
                break;
            case PolKind::Flip:
                if (rng.uniform01() < st.red_prob)
                    slot = int(rng.below(uint32_t(r)));
                else
                    slot = r + int(rng.below(uint32_t(blue)));
                break;
            case PolKind::Smooth: {
                if (!st.blue_forever &&
                    (rs.red_uses >= st.budget || st.rb_steps >= st.rb_target))
                    st.blue_forever = true;
                bool blue_only = st.blue_forever || st.phase_blue;
                slot = blue_only ? r + int(rng.below(uint32_t(blue)))
                                 : int(rng.below(uint32_t(deg)));
                if (!st.blue_forever) {
                    if (!st.phase_blue) ++st.rb_steps;
                    if (++st.phase_pos == st.phase_length) {
                        st.phase_pos = 0;
                        st.phase_blue = !st.phase_blue;
                    }
                }
                break;
            }
            case PolKind::Congestion:
                slot = ((t - 1) % st.period < st.C) ? r + int(rng.below(uint32_t(blue)))
                                                    : int(rng.below(uint32_t(deg)));
                break;
        }
        red_step = slot < r;
        v = nbr[size_t(v) * deg + slot];
        if (red_step) ++rs.red_uses;

        if (!rs.visited[v]) {
            rs.visited[v] = 1;
            --unvisited;
            if (shortcut_armed) --reachable;
            if (unvisited == 0) {
                rs.cover_time = t;
                rs.steps = t;
                rs.end_vertex = int32_t(v);
                tick_checkpoints(t);
                if constexpr (kWantCheckpoints)
                    while (cp_idx < checkpoints->size()) {
                        unvisited_out->push_back(0);
                        ++cp_idx;
                    }
                return rs;
            }
        }
        tick_checkpoints(t);

        if (!shortcut_armed && irreversibly_blue(st, rs.red_uses)) arm_shortcut();
        if (shortcut_armed && reachable == 0) {
            // failure certain; outputs below are what a full run would report
            rs.frozen = true;
            break;
        }
    }
    rs.steps = step_cap;
    rs.cover_time = kFailed;
    rs.end_vertex = int32_t(v);
    if constexpr (kWantCheckpoints)
        while (cp_idx < checkpoints->size()) {
            unvisited_out->push_back(unvisited);
            ++cp_idx;
        }
    return rs;
}

} // namespace

CoverResult run_cover(const ColoredGraph& g, const WalkPolicy& policy, int start, Rng& rng,
                      int64_t step_cap) {
    RunState rs = run_walk<false>(g, policy, start, rng, step_cap, nullptr, nullptr);
    return {rs.cover_time, rs.red_uses, rs.steps, int32_t(start)};
}

CoverTrace run_cover_trace(const ColoredGraph& g, const WalkPolicy& policy, int start,
                           Rng& rng, int64_t step_cap) {
    RunState rs = run_walk<false>(g, policy, start, rng, step_cap, nullptr, nullptr);
    CoverTrace tr;
    tr.result = {rs.cover_time, rs.red_uses, rs.steps, int32_t(start)};
    tr.visited = std::move(rs.visited);
    tr.end_vertex = rs.end_vertex;
    return tr;
}

CheckpointedResult run_with_checkpoints(const ColoredGraph& g, const WalkPolicy& policy,
                                        int start, Rng& rng, int64_t step_cap,
                                        const std::vector<int64_t>& checkpoints) {
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw parameter_error("checkpoints must be sorted ascending");
    if (!checkpoints.empty() && checkpoints.front() < 0)
        throw parameter_error("checkpoints must be >= 0");
    CheckpointedResult out;
    out.unvisited.reserve(checkpoints.size());
    RunState rs = run_walk<true>(g, policy, start, rng, step_cap, &checkpoints, &out.unvisited);
    out.result = {rs.cover_time, rs.red_uses, rs.steps, int32_t(start)};
    return out;
}

int64_t first_visit_after(const ColoredGraph& g, int start, int target, int64_t t_min,
                          int64_t horizon, Rng& rng) {
    const int deg = g.degree();
    int v = start;
    if (t_min <= 0 && v == target) return 0;
    for (int64_t t = 1; t <= horizon; ++t) {
        v = g.neighbor(v, int(rng.below(uint32_t(deg))));
        if (t >= t_min && v == target) return t;
    }
    return kFailed;
}

} // namespace rbwalk
