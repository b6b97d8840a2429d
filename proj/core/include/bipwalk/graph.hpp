#pragma once

#include <cstdint>
#include <vector>

namespace bipwalk {

// Complete bipartite graph K(n1, n2). Partite set X holds vertices 0..n1-1,
// set Y holds n1..n1+n2-1. States of the coined walk live on directed arcs;
// the dense arc order is tail-major:
//   arc (x, y_j)  ->  x * n2 + j            for x in X, j in 0..n2-1
//   arc (y_j, x)  ->  n1 * n2 + j * n1 + x  for y_j in Y
// so each tail's coin block is contiguous.
struct GraphSpec {
    int n1 = 0;
    int n2 = 0;

    GraphSpec(int n1_, int n2_);

    std::int64_t arc_count() const noexcept {
        return 2ll * n1 * n2;
    }

    std::int64_t x_arc(int x, int j) const noexcept {
        return static_cast<std::int64_t>(x) * n2 + j;
    }
    std::int64_t y_arc(int j, int x) const noexcept {
        return static_cast<std::int64_t>(n1) * n2
             + static_cast<std::int64_t>(j) * n1 + x;
    }

    // Index of the opposite arc (u,v) -> (v,u). Involution.
    std::int64_t reverse_arc(std::int64_t a) const noexcept;

    bool operator==(const GraphSpec&) const = default;
};

// Marked vertices: the first k1 of X and first k2 of Y in the canonical
// labeling, or explicit lists. Lists are kept sorted; Y entries are local
// indices j in 0..n2-1.
struct MarkConfig {
    GraphSpec graph;
    std::vector<int> marked_x;
    std::vector<int> marked_y;

    int k1() const noexcept { return static_cast<int>(marked_x.size()); }
    int k2() const noexcept { return static_cast<int>(marked_y.size()); }

    bool is_marked_x(int x) const noexcept;
    bool is_marked_y(int j) const noexcept;
};

// Canonical marking: vertices 0..k1-1 of X and 0..k2-1 of Y.
MarkConfig mark(const GraphSpec& g, int k1, int k2);

// Arbitrary marking; validates range and uniqueness.
MarkConfig mark_explicit(const GraphSpec& g, std::vector<int> xs,
                         std::vector<int> ys);

} // namespace bipwalk
