#include "rbwalk/graphgen.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "rbwalk/errors.hpp"

namespace rbwalk {

namespace {

// one pairing attempt: shuffle the n*d stubs, pair consecutive ones; fail on
// any loop or repeated pair
bool try_pairing(int n, int d, Rng& rng, std::vector<int32_t>& stubs,
                 std::unordered_set<int64_t>& seen, std::vector<Edge>& out, Color color) {
    const size_t m = stubs.size();
    for (size_t i = m - 1; i > 0; --i) {
        size_t j = rng.below(uint32_t(i + 1));
        std::swap(stubs[i], stubs[j]);
    }
    seen.clear();
    out.clear();
    for (size_t i = 0; i < m; i += 2) {
        int32_t u = stubs[i], v = stubs[i + 1];
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        int64_t key = int64_t(u) * n + v;
        if (!seen.insert(key).second) return false;
        out.push_back({u, v, color});
    }
    (void)d;
    return true;
}

} // namespace

std::vector<Edge> config_regular_edges(int n, int d, Rng& rng, Color color) {
    std::vector<int32_t> stubs(size_t(n) * d);
    for (int v = 0; v < n; ++v)
        std::fill_n(stubs.begin() + size_t(v) * d, d, int32_t(v));
    std::vector<Edge> out;
    std::unordered_set<int64_t> seen;
    seen.reserve(size_t(n) * d / 2 * 2);
    for (int attempt = 0; attempt < kPairingRetryCap; ++attempt)
        if (try_pairing(n, d, rng, stubs, seen, out, color)) return out;
    throw generation_error("configuration model rejection cap exceeded");
}

ColoredGraph gen_regular(int n, int d, uint64_t seed) {
    if (d < 1) throw parameter_error("degree must be >= 1");
    if (n <= d) throw parameter_error("need n > d");
    if ((int64_t(n) * d) % 2 != 0) throw parameter_error("n*d must be even");
    Rng rng(seed);
    auto edges = config_regular_edges(n, d, rng, Color::Blue);
    return ColoredGraph(n, 0, d, std::move(edges));
}

ColoredGraph gen_union(int n, int r, int b, uint64_t seed) {
    if (r < 1) throw parameter_error("r >= 1 required");
    if (b < 2) throw parameter_error("b >= 2 required");
    if ((int64_t(n) * r) % 2 != 0) throw parameter_error("n*r must be even");
    if ((int64_t(n) * b) % 2 != 0) throw parameter_error("n*b must be even");
    if (n <= r || n <= b) throw parameter_error("need n > max(r, b)");
    Rng rng(seed);
    auto edges = config_regular_edges(n, r, rng, Color::Red);
    auto blue = config_regular_edges(n, b, rng, Color::Blue);
    edges.insert(edges.end(), blue.begin(), blue.end());
    return ColoredGraph(n, r, b, std::move(edges));
}

ColoredGraph gen_hamilton_union(int n, int r, uint64_t seed) {
    if (n < 3) throw parameter_error("n >= 3 required");
    if (r < 1) throw parameter_error("r >= 1 required");
    if ((int64_t(n) * r) % 2 != 0) throw parameter_error("n*r must be even");
    if (n <= r) throw parameter_error("need n > r");
    Rng rng(seed);
    auto edges = config_regular_edges(n, r, rng, Color::Red);
    std::vector<int32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = int(rng.below(uint32_t(i + 1)));
        std::swap(perm[i], perm[j]);
    }
    for (int i = 0; i < n; ++i)
        edges.push_back({perm[i], perm[(i + 1) % n], Color::Blue});
    return ColoredGraph(n, r, 2, std::move(edges));
}

ColoredGraph gen_twofactor_union(int n, int r, uint64_t seed) {
    if (n < 3) throw parameter_error("n >= 3 required");
    if (r < 1) throw parameter_error("r >= 1 required");
    if ((int64_t(n) * r) % 2 != 0) throw parameter_error("n*r must be even");
    if (n <= r) throw parameter_error("need n > r");
    Rng rng(seed);
    auto edges = config_regular_edges(n, r, rng, Color::Red);
    auto blue = config_regular_edges(n, 2, rng, Color::Blue);
    edges.insert(edges.end(), blue.begin(), blue.end());
    return ColoredGraph(n, r, 2, std::move(edges));
}

const char* graph_model_name(GraphModel m) {
    switch (m) {
        case GraphModel::Regular: return "regular";
        case GraphModel::Union: return "union";
        case GraphModel::Hamilton: return "hamilton";
        case GraphModel::TwoFactor: return "twofactor";
    }
    return "?";
}

GraphModel graph_model_from_name(const std::string& name) {
    if (name == "regular") return GraphModel::Regular;
    if (name == "union") return GraphModel::Union;
    if (name == "hamilton") return GraphModel::Hamilton;
    if (name == "twofactor") return GraphModel::TwoFactor;
    throw parameter_error("unknown graph model: " + name);
}

ColoredGraph build_graph(const GraphSpec& s) {
    switch (s.model) {
        case GraphModel::Regular:
            if (s.r != 0) throw parameter_error("regular model stores its degree as b (r must be 0)");
            return gen_regular(s.n, s.b, s.seed);
        case GraphModel::Union: return gen_union(s.n, s.r, s.b, s.seed);
        case GraphModel::Hamilton:
            if (s.b != 2) throw parameter_error("hamilton model has b = 2");
            return gen_hamilton_union(s.n, s.r, s.seed);
        case GraphModel::TwoFactor:
            if (s.b != 2) throw parameter_error("twofactor model has b = 2");
            return gen_twofactor_union(s.n, s.r, s.seed);
    }
    throw parameter_error("unknown graph model");
}

} // namespace rbwalk
