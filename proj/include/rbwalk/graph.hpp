#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rbwalk {

enum class Color : uint8_t { Red = 0, Blue = 1 };

struct Edge {
    int32_t u, v;   // normalized u < v (no self-loops)
    Color color;
};

// Union of a red r-regular and a blue b-regular graph on vertices 0..n-1.
// Immutable once built. Adjacency is a flat n x (r+b) table with the r red
// slots first, so walk kernels pick a slot with one bounded-random draw and
// tell colors by slot index alone. A red and a blue edge may join the same
// pair of vertices; they remain two distinct transitions. Within one color
// parallel edges and loops are rejected.
class ColoredGraph {
public:
    ColoredGraph(int n, int r, int b, std::vector<Edge> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    int b() const { return b_; }
    int degree() const { return r_ + b_; }

    // slot k: red for k < r, blue for r <= k < r+b
    int32_t neighbor(int v, int k) const { return nbr_[size_t(v) * deg_ + k]; }
    int32_t edge_id(int v, int k) const { return eid_[size_t(v) * deg_ + k]; }
    const int32_t* row(int v) const { return nbr_.data() + size_t(v) * deg_; }

    // canonical edge list, sorted by (u, v, color); edge ids index into it
    const std::vector<Edge>& edges() const { return edges_; }

    bool connected() const;
    // vertices reachable from v using blue edges only
    std::vector<int32_t> blue_component(int v) const;
    // cycle decomposition of the blue subgraph; requires b == 2
    std::vector<int64_t> blue_cycle_lengths() const;

private:
    int n_, r_, b_, deg_;
    std::vector<int32_t> nbr_;
    std::vector<int32_t> eid_;
    std::vector<Edge> edges_;
};

// Text format: header "n <n> r <r> b <b>", then one line per edge
// "<u> <v> <R|B>" with u < v (a cross-color parallel pair repeats the
// vertices on two lines). Writing is canonical, so write/read/write
// round-trips byte-exactly.
ColoredGraph read_graph(std::istream& in);
ColoredGraph read_graph_file(const std::string& path);
void write_graph(const ColoredGraph& g, std::ostream& out);
void write_graph_file(const ColoredGraph& g, const std::string& path);

} // namespace rbwalk
