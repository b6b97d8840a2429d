#pragma once

#include "bipwalk/defs.hpp"
#include "bipwalk/eigen.hpp"
#include "bipwalk/matrix.hpp"
#include "bipwalk/spectral.hpp"

#include <cstdint>
#include <vector>

namespace bipwalk {

// Both sets marked, k_i << n_i. The spectrum splits around +-1 with phases
//   sin(alpha) = sqrt(k2/n2) + sqrt(k1/n1),
//   sin(beta)  = sqrt(k2/n2) - sqrt(k1/n1)   (beta < 0 when k1/n1 > k2/n2).
// regime_score = sqrt(max(k1/n1, k2/n2)) bounds the size of the truncation
// error in the first-order results.
struct BothSetsAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double regime_score = 0.0;
};
BothSetsAngles bothsets_angles(int n1, int n2, int k1, int k2);

// First-order eigensystem of the 8x8 operator via degenerate perturbation
// theory: the k = 0 operator has eigenvalues +-1 with 4-dimensional
// eigenspaces; the first-order correction is diagonalized inside each.
// Eigenvalues are completed to unit modulus. Order: the +1 block's pairs by
// ascending phase, then the -1 block's.
std::vector<EigenPair> perturbative_eigensystem_bothsets(int n1, int n2,
                                                         int k1, int k2);

// The same eigensystem in closed form: eigenvalues +-e^{+-i alpha},
// +-e^{+-i beta}; eigenvectors parameter independent. Same order.
std::vector<EigenPair> asymptotic_eigensystem_bothsets(int n1, int n2,
                                                       int k1, int k2);

// First-order success probabilities after t steps.
struct BothSetsProb {
    double p_x = 0.0;
    double p_y = 0.0;
    double p_total = 0.0;
};
BothSetsProb asymptotic_prob_bothsets(int n1, int n2, int k1, int k2,
                                      Init init, std::int64_t t);

// Runtime and peak predictions for both sets marked. The two sets peak at
// different times except on resonance (k1/n1 = k2/n2), where both phases
// coincide and the full success probability approaches 1.
struct BothSetsPrediction {
    double t_x = 0.0;             // pi / (alpha - beta)
    double t_y = 0.0;             // pi / (alpha + beta)
    double t_x_small_angle = 0.0; // (pi/2) sqrt(n1/k1)
    double t_y_small_angle = 0.0; // (pi/2) sqrt(n2/k2)
    bool resonant = false;        // alpha - beta == alpha + beta up to rounding
    double p_x_max = 0.0;         // first-order envelope maxima per set
    double p_y_max = 0.0;
};
BothSetsPrediction runtimes_bothsets(int n1, int n2, int k1, int k2, Init init);

} // namespace bipwalk
