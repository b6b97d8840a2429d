#include "bipwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bipwalk {

double WalkState::norm() const {
    double s = 0.0;
    for (const cx& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

WalkState initial_state_vertices(const GraphSpec& g) {
    WalkState s(g);
    const double ax = 1.0 / std::sqrt(double(g.n1 + g.n2) * g.n2);
    const double ay = 1.0 / std::sqrt(double(g.n1 + g.n2) * g.n1);
    const std::size_t half = static_cast<std::size_t>(g.n1) * g.n2;
    for (std::size_t i = 0; i < half; ++i) s.amp[i] = ax;
    for (std::size_t i = half; i < s.amp.size(); ++i) s.amp[i] = ay;
    return s;
}

WalkState initial_state_edges(const GraphSpec& g) {
    WalkState s(g);
    const double a = 1.0 / std::sqrt(2.0 * g.n1 * g.n2);
    for (cx& v : s.amp) v = a;
    return s;
}

WalkState initial_state(const GraphSpec& g, Init init) {
    return init == Init::Vertices ? initial_state_vertices(g)
                                  : initial_state_edges(g);
}

void apply_oracle(WalkState& s, const MarkConfig& m) {
    if (m.graph != s.graph)
        throw std::invalid_argument("apply_oracle: marks belong to a different graph");
    const int n1 = s.graph.n1, n2 = s.graph.n2;
    for (int x : m.marked_x) {
        cx* block = s.amp.data() + static_cast<std::size_t>(x) * n2;
        for (int j = 0; j < n2; ++j) block[j] = -block[j];
    }
    cx* yside = s.amp.data() + static_cast<std::size_t>(n1) * n2;
    for (int j : m.marked_y) {
        cx* block = yside + static_cast<std::size_t>(j) * n1;
        for (int x = 0; x < n1; ++x) block[x] = -block[x];
    }
}

void apply_coin(WalkState& s) {
    const int n1 = s.graph.n1, n2 = s.graph.n2;
    for (int x = 0; x < n1; ++x) {
        cx* block = s.amp.data() + static_cast<std::size_t>(x) * n2;
        cx sum = 0.0;
        for (int j = 0; j < n2; ++j) sum += block[j];
        const cx twice_mean = sum * (2.0 / n2);
        for (int j = 0; j < n2; ++j) block[j] = twice_mean - block[j];
    }
    cx* yside = s.amp.data() + static_cast<std::size_t>(n1) * n2;
    for (int j = 0; j < n2; ++j) {
        cx* block = yside + static_cast<std::size_t>(j) * n1;
        cx sum = 0.0;
        for (int x = 0; x < n1; ++x) sum += block[x];
        const cx twice_mean = sum * (2.0 / n1);
        for (int x = 0; x < n1; ++x) block[x] = twice_mean - block[x];
    }
}

void apply_shift(WalkState& s) {
    const int n1 = s.graph.n1, n2 = s.graph.n2;
    cx* xside = s.amp.data();
    cx* yside = s.amp.data() + static_cast<std::size_t>(n1) * n2;
    // Swap (x, y_j) with (y_j, x). Walking x within j keeps the y-side access
    // contiguous; the x-side stride is n2.
    for (int j = 0; j < n2; ++j) {
        cx* yblock = yside + static_cast<std::size_t>(j) * n1;
        for (int x = 0; x < n1; ++x)
            std::swap(xside[static_cast<std::size_t>(x) * n2 + j], yblock[x]);
    }
}

void step(WalkState& s, const MarkConfig& m) {
    apply_oracle(s, m);
    apply_coin(s);
    apply_shift(s);
}

void walk_only_step(WalkState& s) {
    apply_coin(s);
    apply_shift(s);
}

MarkedProb marked_probability(const WalkState& s, const MarkConfig& m) {
    if (m.graph != s.graph)
        throw std::invalid_argument("marked_probability: marks belong to a different graph");
    const int n1 = s.graph.n1, n2 = s.graph.n2;
    MarkedProb p;
    for (int x : m.marked_x) {
        const cx* block = s.amp.data() + static_cast<std::size_t>(x) * n2;
        for (int j = 0; j < n2; ++j) p.p_x += std::norm(block[j]);
    }
    const cx* yside = s.amp.data() + static_cast<std::size_t>(n1) * n2;
    for (int j : m.marked_y) {
        const cx* block = yside + static_cast<std::size_t>(j) * n1;
        for (int x = 0; x < n1; ++x) p.p_y += std::norm(block[x]);
    }
    p.p_total = p.p_x + p.p_y;
    return p;
}

ProbabilityTrace evolve(WalkState s, const MarkConfig& m, std::int64_t steps) {
    if (steps < 0)
        throw std::invalid_argument("evolve: steps must be nonnegative");
    ProbabilityTrace tr;
    tr.rows.reserve(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t t = 0;; ++t) {
        const MarkedProb p = marked_probability(s, m);
        tr.rows.push_back({t, p.p_x, p.p_y, p.p_total});
        if (t == steps) break;
        step(s, m);
    }
    return tr;
}

} // namespace bipwalk
