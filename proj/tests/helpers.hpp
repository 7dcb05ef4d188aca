// Hand-built graphs with known structure, shared across test binaries.
#pragma once

#include <vector>

#include "rbwalk/graph.hpp"

namespace helpers {

using rbwalk::Color;
using rbwalk::ColoredGraph;
using rbwalk::Edge;

// cycle 0-1-...-n-1-0, all edges one color
inline ColoredGraph make_cycle(int n, Color c = Color::Blue) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({int32_t(i), int32_t((i + 1) % n), c});
    const int r = c == Color::Red ? 2 : 0;
    const int b = c == Color::Blue ? 2 : 0;
    return ColoredGraph(n, r, b, es);
}

inline ColoredGraph make_triangle() { return make_cycle(3); }

// two blue triangles {0,1,2} and {3,4,5} joined by a red perfect matching
inline ColoredGraph make_two_triangles_red_matching() {
    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i) {
        es.push_back({int32_t(i), int32_t((i + 1) % 3), Color::Blue});
        es.push_back({int32_t(3 + i), int32_t(3 + (i + 1) % 3), Color::Blue});
        es.push_back({int32_t(i), int32_t(i + 3), Color::Red});
    }
    return ColoredGraph(6, 1, 2, es);
}

// two disjoint blue triangles (disconnected)
inline ColoredGraph make_two_disjoint_triangles() {
    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i) {
        es.push_back({int32_t(i), int32_t((i + 1) % 3), Color::Blue});
        es.push_back({int32_t(3 + i), int32_t(3 + (i + 1) % 3), Color::Blue});
    }
    return ColoredGraph(6, 0, 2, es);
}

// blue 60-cycle plus a red perfect matching containing exactly one edge
// parallel to a blue edge (the pair {0,1}); all other red edges span far.
inline ColoredGraph make_sixty_one_parallel() {
    std::vector<Edge> es;
    for (int i = 0; i < 60; ++i) es.push_back({int32_t(i), int32_t((i + 1) % 60), Color::Blue});
    es.push_back({0, 1, Color::Red});
    for (int i = 2; i <= 30; ++i) es.push_back({int32_t(i), int32_t(i + 29), Color::Red});
    return ColoredGraph(60, 1, 2, es);
}

} // namespace helpers
