#pragma once

#include "bipwalk/defs.hpp"
#include "bipwalk/graph.hpp"
#include "bipwalk/matrix.hpp"
#include "bipwalk/trace.hpp"
#include "bipwalk/walk.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bipwalk {

enum class SubspaceKind { OneSet4, BothSets8 };

// Orthonormal arc-space vectors, one per vertex-class arc bundle, spanning an
// invariant subspace of the search step. Labels follow tail/head classes:
// one set marked (a = marked X, b = all Y, c = unmarked X):
//   ab, ba, bc, cb
// both sets marked (a = marked X, b = marked Y, c = unmarked X, d = unmarked Y):
//   ab, ad, ba, bc, cb, cd, da, dc
struct SubspaceBasis {
    SubspaceKind kind;
    GraphSpec graph;
    MarkConfig marks;
    std::vector<std::string> labels;
    std::vector<std::vector<cx>> vectors; // arc-space, orthonormal
};

// Requires 1 <= k1 <= n1-1 and k2 = 0. Throws DegenerateBasisError otherwise.
SubspaceBasis basis_oneset(const MarkConfig& m);

// Requires 1 <= k1 <= n1-1 and 1 <= k2 <= n2-1.
SubspaceBasis basis_bothsets(const MarkConfig& m);

// Coordinates of a walk state in a reduced basis.
struct ReducedState {
    SubspaceKind kind;
    int n1 = 0, n2 = 0, k1 = 0, k2 = 0;
    std::vector<cx> coords;

    MarkedProb marked_probability() const;
};

// Projects s onto the basis; throws ProjectionLossError if more than loss_tol
// of the norm lies outside the subspace.
ReducedState reduce_state(const WalkState& s, const SubspaceBasis& b,
                          double loss_tol = 1e-9);

// Closed-form reduced coordinates of the two initial states.
ReducedState reduced_initial_state(const GraphSpec& g, int k1, int k2, Init init);

// The search step written in the one-set basis, closed form:
// cos(theta) = 1 - 2 k1/n1, sin(theta) = (2/n1) sqrt(k1 (n1-k1)).
Matrix reduced_operator_oneset(int n1, int k1);

// The search step written in the both-sets basis, closed form in
// c_i = 1 - 2 k_i/n_i and s_i = (2/n_i) sqrt(k_i (n_i-k_i)).
Matrix reduced_operator_bothsets(int n1, int n2, int k1, int k2);

// The search step conjugated onto the basis numerically, by applying the full
// step to each basis vector. Agrees with the closed forms to rounding.
Matrix reduced_operator_conjugated(const SubspaceBasis& b);

// Runs `steps` reduced steps, recording marked probability before each.
ProbabilityTrace reduced_evolve(ReducedState s, const Matrix& op,
                                std::int64_t steps);

// Reduced trace for a configuration, all pieces closed form.
ProbabilityTrace reduced_trace(const GraphSpec& g, int k1, int k2, Init init,
                               std::int64_t steps);

} // namespace bipwalk
