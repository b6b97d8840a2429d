#pragma once

#include "bipwalk/defs.hpp"
#include "bipwalk/graph.hpp"
#include "bipwalk/trace.hpp"

#include <cstdint>
#include <vector>

namespace bipwalk {

// Amplitudes over the directed arcs of g, in the dense arc order of GraphSpec.
struct WalkState {
    GraphSpec graph;
    std::vector<cx> amp;

    explicit WalkState(const GraphSpec& g)
        : graph(g), amp(static_cast<std::size_t>(g.arc_count())) {}

    double norm() const;
};

// Uniform superposition of vertices, each spreading evenly over its arcs:
// X-tailed amplitudes 1/sqrt((n1+n2) n2), Y-tailed 1/sqrt((n1+n2) n1).
WalkState initial_state_vertices(const GraphSpec& g);

// Uniform superposition of arcs: every amplitude 1/sqrt(2 n1 n2).
WalkState initial_state_edges(const GraphSpec& g);

WalkState initial_state(const GraphSpec& g, Init init);

// Sign flip on every arc whose tail is marked.
void apply_oracle(WalkState& s, const MarkConfig& m);

// Grover diffusion on each tail's coin block: a -> 2*mean(block) - a.
void apply_coin(WalkState& s);

// Flip-flop shift: amplitude moves to the reversed arc.
void apply_shift(WalkState& s);

// One search step: oracle, then coin, then shift.
void step(WalkState& s, const MarkConfig& m);

// One unmarked step: coin, then shift.
void walk_only_step(WalkState& s);

// Probability of measuring the walker in a marked vertex, split by the
// partite set of the arc's tail.
struct MarkedProb {
    double p_x = 0.0;
    double p_y = 0.0;
    double p_total = 0.0;
};
MarkedProb marked_probability(const WalkState& s, const MarkConfig& m);

// Runs `steps` search steps from `s`, recording marked probability before
// each step; the trace has steps+1 rows, row 0 being the initial state.
ProbabilityTrace evolve(WalkState s, const MarkConfig& m, std::int64_t steps);

} // namespace bipwalk
