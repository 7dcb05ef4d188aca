#include <cmath>
#include <vector>

#include "rbwalk/errors.hpp"
#include "rbwalk/graphgen.hpp"

namespace rbwalk {

int small_cycle_sigma(int n) {
    if (n < 1) throw parameter_error("n >= 1 required");
    return int(std::floor(std::sqrt(std::log(double(n)))));
}

// A vertex is locally tree-like iff its distance to every cycle of length
// <= sigma exceeds sigma. Every such cycle is found edge-by-edge: edge
// (u,w) lies on one iff w is reachable from u within sigma-1 steps in
// G minus that edge. Vertices on the found shortest path lie on a small
// cycle too, so they all seed the exclusion-ball BFS below.
std::vector<char> locally_tree_like(const ColoredGraph& g, int sigma) {
    const int n = g.n(), deg = g.degree();
    std::vector<char> on_small_cycle(n, 0);
    if (sigma >= 2) {
        std::vector<int32_t> dist(n, -1), parent(n, -1), touched;
        std::vector<int32_t> frontier, next;
        for (size_t ei = 0; ei < g.edges().size(); ++ei) {
            const Edge& e = g.edges()[ei];
            const int32_t eid = int32_t(ei);
            // BFS from e.u avoiding edge eid, depth cap sigma-1, target e.v
            touched.clear();
            frontier.assign(1, e.u);
            dist[e.u] = 0;
            parent[e.u] = -1;
            touched.push_back(e.u);
            int found = -1;
            for (int d = 0; d < sigma - 1 && found < 0 && !frontier.empty(); ++d) {
                next.clear();
                for (int v : frontier) {
                    for (int k = 0; k < deg; ++k) {
                        if (g.edge_id(v, k) == eid) continue;
                        int w = g.neighbor(v, k);
                        if (dist[w] >= 0) continue;
                        dist[w] = d + 1;
                        parent[w] = v;
                        touched.push_back(w);
                        if (w == e.v) { found = w; break; }
                        next.push_back(w);
                    }
                    if (found >= 0) break;
                }
                frontier.swap(next);
            }
            if (found >= 0)
                for (int v = found; v >= 0; v = parent[v]) on_small_cycle[v] = 1;
            for (int v : touched) { dist[v] = -1; parent[v] = -1; }
        }
    }

    // ball of radius sigma around the seeds
    std::vector<int32_t> dist(n, -1), frontier, next;
    for (int v = 0; v < n; ++v)
        if (on_small_cycle[v]) { dist[v] = 0; frontier.push_back(v); }
    for (int d = 0; d < sigma && !frontier.empty(); ++d) {
        next.clear();
        for (int v : frontier)
            for (int k = 0; k < deg; ++k) {
                int w = g.neighbor(v, k);
                if (dist[w] < 0) { dist[w] = d + 1; next.push_back(w); }
            }
        frontier.swap(next);
    }
    std::vector<char> tree_like(n, 0);
    for (int v = 0; v < n; ++v) tree_like[v] = (dist[v] < 0);
    return tree_like;
}

// Power iteration on the squared transition operator with the uniform
// vector deflated each sweep. Squaring makes the target eigenvalue
// lambda2^2 >= 0, so plus/minus pairs and the bipartite -1 are handled;
// a bipartite blue structure surfaces as lambda2 = 1.
double lambda2_estimate(const ColoredGraph& g) {
    const int n = g.n(), deg = g.degree();
    if (n == 1) return 0.0;
    std::vector<double> x(n), y(n);
    Rng rng(0x5eedu);
    for (auto& v : x) v = rng.uniform01() - 0.5;
    auto deflate = [&](std::vector<double>& z) {
        double mean = 0;
        for (double v : z) mean += v;
        mean /= n;
        for (auto& v : z) v -= mean;
    };
    auto norm = [&](const std::vector<double>& z) {
        double s = 0;
        for (double v : z) s += v * v;
        return std::sqrt(s);
    };
    auto apply = [&](const std::vector<double>& from, std::vector<double>& to) {
        for (int v = 0; v < n; ++v) {
            const int32_t* row = g.row(v);
            double s = 0;
            for (int k = 0; k < deg; ++k) s += from[row[k]];
            to[v] = s / deg;
        }
    };
    deflate(x);
    double nx = norm(x);
    if (nx == 0) return 0.0;
    for (auto& v : x) v /= nx;
    double est = 0;
    for (int it = 0; it < 100000; ++it) {
        apply(x, y);
        apply(y, x);
        deflate(x);
        double lam2 = norm(x); // ~ lambda2^2 since |x| was 1
        double next_est = std::sqrt(std::max(0.0, lam2));
        if (lam2 <= 1e-300) return 0.0;
        for (auto& v : x) v /= lam2;
        if (it > 0 && std::abs(next_est - est) <= 1e-8) return std::min(next_est, 1.0);
        est = next_est;
    }
    return std::min(est, 1.0);
}

StructureReport analyze_structure(const ColoredGraph& g) {
    if (!g.connected()) throw structure_error("graph is disconnected; cover time undefined");
    StructureReport rep;
    rep.sigma = small_cycle_sigma(g.n());
    rep.locally_tree_like = locally_tree_like(g, rep.sigma);
    for (char c : rep.locally_tree_like) (c ? rep.tree_like_count : rep.non_tree_like_count)++;
    rep.lambda2 = lambda2_estimate(g);
    if (g.b() == 2) rep.blue_cycle_lengths = g.blue_cycle_lengths();
    return rep;
}

} // namespace rbwalk
