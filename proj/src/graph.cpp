#include "rbwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rbwalk/errors.hpp"

namespace rbwalk {

ColoredGraph::ColoredGraph(int n, int r, int b, std::vector<Edge> edges)
    : n_(n), r_(r), b_(b), deg_(r + b), edges_(std::move(edges)) {
    if (n < 1) throw parameter_error("vertex count must be positive");
    if (r < 0 || b < 0 || deg_ < 1) throw parameter_error("bad degree pair");

    for (auto& e : edges_) {
        if (e.u == e.v) throw parameter_error("self-loop in edge list");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) throw parameter_error("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b2) {
        if (a.u != b2.u) return a.u < b2.u;
        if (a.v != b2.v) return a.v < b2.v;
        return a.color < b2.color;
    });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v &&
            edges_[i].color == edges_[i - 1].color)
            throw parameter_error("parallel edges within one color");

    if (edges_.size() != size_t(n) * deg_ / 2)
        throw parameter_error("edge count does not match n(r+b)/2");

    nbr_.assign(size_t(n) * deg_, -1);
    eid_.assign(size_t(n) * deg_, -1);
    std::vector<int> red_fill(n, 0), blue_fill(n, 0);
    auto place = [&](int32_t at, int32_t other, Color c, int32_t id) {
        int slot;
        if (c == Color::Red) {
            slot = red_fill[at]++;
            if (slot >= r_) throw parameter_error("red degree exceeds r");
        } else {
            slot = r_ + blue_fill[at]++;
            if (slot >= deg_) throw parameter_error("blue degree exceeds b");
        }
        nbr_[size_t(at) * deg_ + slot] = other;
        eid_[size_t(at) * deg_ + slot] = id;
    };
    for (size_t i = 0; i < edges_.size(); ++i) {
        place(edges_[i].u, edges_[i].v, edges_[i].color, int32_t(i));
        place(edges_[i].v, edges_[i].u, edges_[i].color, int32_t(i));
    }
    for (int v = 0; v < n; ++v)
        if (red_fill[v] != r_ || blue_fill[v] != b_)
            throw parameter_error("vertex degree differs from (r, b)");
}

bool ColoredGraph::connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int32_t> stack{0};
    seen[0] = 1;
    int64_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const int32_t* row_ = row(v);
        for (int k = 0; k < deg_; ++k) {
            int w = row_[k];
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<int32_t> ColoredGraph::blue_component(int v) const {
    std::vector<char> seen(n_, 0);
    std::vector<int32_t> stack{int32_t(v)}, out{int32_t(v)};
    seen[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const int32_t* row_ = row(u);
        for (int k = r_; k < deg_; ++k) {
            int w = row_[k];
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int64_t> ColoredGraph::blue_cycle_lengths() const {
    if (b_ != 2) throw parameter_error("blue cycle decomposition needs b = 2");
    std::vector<char> seen(n_, 0);
    std::vector<int64_t> lengths;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        // each vertex has exactly two blue slots and no parallel blue edges,
        // so following the slot that does not point back traces the cycle
        int64_t len = 0;
        int prev = -1, cur = s;
        do {
            seen[cur] = 1;
            ++len;
            int a = neighbor(cur, r_), b2 = neighbor(cur, r_ + 1);
            int nxt = (a == prev) ? b2 : a;
            prev = cur;
            cur = nxt;
        } while (cur != s);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

ColoredGraph read_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parameter_error("empty graph file");
    std::istringstream head(line);
    std::string kn, kr, kb;
    int64_t n = -1, r = -1, b = -1;
    head >> kn >> n >> kr >> r >> kb >> b;
    if (head.fail() || kn != "n" || kr != "r" || kb != "b")
        throw parameter_error("bad graph header, expected 'n <n> r <r> b <b>'");
    if (n < 1 || r < 0 || b < 0 || r + b < 1)
        throw parameter_error("bad graph header values");
    std::vector<Edge> edges;
    edges.reserve(size_t(n) * (r + b) / 2);
    int64_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int64_t u, v;
        std::string c;
        ls >> u >> v >> c;
        if (ls.fail() || (c != "R" && c != "B"))
            throw parameter_error("bad edge line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw parameter_error("edge line " + std::to_string(lineno) +
                                  ": vertices must satisfy 0 <= u < v < n");
        edges.push_back({int32_t(u), int32_t(v), c == "R" ? Color::Red : Color::Blue});
    }
    return ColoredGraph(int(n), int(r), int(b), std::move(edges));
}

ColoredGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const ColoredGraph& g, std::ostream& out) {
    out << "n " << g.n() << " r " << g.r() << " b " << g.b() << "\n";
    for (const auto& e : g.edges())
        out << e.u << " " << e.v << " " << (e.color == Color::Red ? 'R' : 'B') << "\n";
}

void write_graph_file(const ColoredGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot open output file: " + path);
    write_graph(g, out);
}

} // namespace rbwalk
