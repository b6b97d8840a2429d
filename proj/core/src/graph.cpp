#include "bipwalk/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace bipwalk {

GraphSpec::GraphSpec(int n1_, int n2_) : n1(n1_), n2(n2_) {
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("GraphSpec: partite sets must be nonempty, got n1="
                                    + std::to_string(n1) + " n2=" + std::to_string(n2));
    if (2ll * n1 * n2 > std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("GraphSpec: arc count 2*n1*n2 exceeds 2^31");
}

std::int64_t GraphSpec::reverse_arc(std::int64_t a) const noexcept {
    const std::int64_t half = static_cast<std::int64_t>(n1) * n2;
    if (a < half) {
        // (x, y_j) -> (y_j, x)
        return half + (a % n2) * n1 + a / n2;
    }
    a -= half;
    return (a % n1) * n2 + a / n1;
}

bool MarkConfig::is_marked_x(int x) const noexcept {
    return std::binary_search(marked_x.begin(), marked_x.end(), x);
}

bool MarkConfig::is_marked_y(int j) const noexcept {
    return std::binary_search(marked_y.begin(), marked_y.end(), j);
}

namespace {

void check_count(int k, int n, const char* side) {
    if (k < 0 || k > n)
        throw std::invalid_argument(std::string("mark: need 0 <= ") + side
                                    + " <= " + std::to_string(n)
                                    + ", got " + std::to_string(k));
}

std::vector<int> checked_list(std::vector<int> v, int n, const char* side) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= n)
            throw std::invalid_argument(std::string("mark_explicit: ") + side
                                        + " vertex " + std::to_string(v[i])
                                        + " out of range");
        if (i > 0 && v[i] == v[i - 1])
            throw std::invalid_argument(std::string("mark_explicit: duplicate ")
                                        + side + " vertex " + std::to_string(v[i]));
    }
    return v;
}

} // namespace

MarkConfig mark(const GraphSpec& g, int k1, int k2) {
    check_count(k1, g.n1, "k1");
    check_count(k2, g.n2, "k2");
    if (k1 == 0 && k2 == 0)
        throw std::invalid_argument("mark: at least one vertex must be marked");
    MarkConfig m{g, {}, {}};
    m.marked_x.resize(k1);
    m.marked_y.resize(k2);
    for (int i = 0; i < k1; ++i) m.marked_x[i] = i;
    for (int j = 0; j < k2; ++j) m.marked_y[j] = j;
    return m;
}

MarkConfig mark_explicit(const GraphSpec& g, std::vector<int> xs,
                         std::vector<int> ys) {
    if (xs.empty() && ys.empty())
        throw std::invalid_argument("mark_explicit: at least one vertex must be marked");
    MarkConfig m{g, checked_list(std::move(xs), g.n1, "X"),
                    checked_list(std::move(ys), g.n2, "Y")};
    return m;
}

} // namespace bipwalk
