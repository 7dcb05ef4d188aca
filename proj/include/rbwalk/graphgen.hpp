#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "rbwalk/graph.hpp"
#include "rbwalk/rng.hpp"

namespace rbwalk {

// configuration-model rejection: restart the whole pairing on any loop or
// multi-edge; give up after this many attempts
inline constexpr int kPairingRetryCap = 1'000'000;

// internal building block, exposed for sampling statistics and tests:
// uniformly random simple d-regular edge set on [n], colored `color`
std::vector<Edge> config_regular_edges(int n, int d, Rng& rng, Color color);

// uniform simple d-regular graph, stored all-blue (r = 0, b = d)
ColoredGraph gen_regular(int n, int d, uint64_t seed);
// independent red r-regular and blue b-regular graphs, merged
ColoredGraph gen_union(int n, int r, int b, uint64_t seed);
// blue Hamilton cycle (random vertex order) + independent red r-regular
ColoredGraph gen_hamilton_union(int n, int r, uint64_t seed);
// blue random 2-factor (simple 2-regular, cycles >= 3) + red r-regular
ColoredGraph gen_twofactor_union(int n, int r, uint64_t seed);

enum class GraphModel { Regular, Union, Hamilton, TwoFactor };

const char* graph_model_name(GraphModel m);
GraphModel graph_model_from_name(const std::string& name);

// ensemble selector used by experiments and the CLI; for Regular, r must be
// 0 and b is the degree
struct GraphSpec {
    GraphModel model = GraphModel::Union;
    int n = 0;
    int r = 0;
    int b = 0;
    uint64_t seed = 0;
};

ColoredGraph build_graph(const GraphSpec& spec);

struct StructureReport {
    int sigma = 0;                       // small-cycle threshold floor(sqrt(ln n))
    std::vector<char> locally_tree_like; // per-vertex flag
    int64_t tree_like_count = 0;
    int64_t non_tree_like_count = 0;
    double lambda2 = 0.0;                // |second eigenvalue| of the simple-walk operator
    std::vector<int64_t> blue_cycle_lengths; // only when b == 2
};

// small-cycle threshold used throughout
int small_cycle_sigma(int n);

// flags vertices farther than sigma from every cycle of length <= sigma
std::vector<char> locally_tree_like(const ColoredGraph& g, int sigma);

// power-iteration estimate of the second-largest eigenvalue magnitude of
// the transition operator (tolerance 1e-8, cap 1e5 iterations)
double lambda2_estimate(const ColoredGraph& g);

StructureReport analyze_structure(const ColoredGraph& g);

} // namespace rbwalk
