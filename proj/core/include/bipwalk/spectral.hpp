#pragma once

#include "bipwalk/defs.hpp"
#include "bipwalk/eigen.hpp"
#include "bipwalk/matrix.hpp"

#include <cstdint>
#include <vector>

namespace bipwalk {

// One marked set. theta is the reduced-operator rotation angle,
// phi = theta/2 = arcsin sqrt(k1/n1) the halved phase the eigenvalues carry.
struct OneSetAngles {
    double theta = 0.0;
    double phi = 0.0;
};
OneSetAngles oneset_angles(int n1, int k1);

struct EigenPair {
    cx value;
    std::vector<cx> vector;
};

// Exact eigensystem of the 4x4 one-set operator. Order:
//   -e^{-i phi}, e^{-i phi}, -e^{i phi}, e^{i phi}.
std::vector<EigenPair> exact_eigensystem_oneset(int n1, int k1);

// Coefficients <psi_j | init> of the reduced initial state in that order.
std::vector<cx> decompose_initial_oneset(int n1, int n2, int k1, Init init);

// Success probability after t steps, closed form. Exact for all t, not an
// asymptotic. All the weight sits on marked X tails, so p_y is always zero;
// even and odd steps follow different envelopes (vertex start: n1/(n1+n2)
// even, n2/(n1+n2) odd; edge start: 1/2 on both).
struct OneSetProb {
    double p_x = 0.0;
    double p_y = 0.0;
    double p_total = 0.0;
};
OneSetProb closed_form_prob_oneset(int n1, int n2, int k1, Init init,
                                   std::int64_t t);

// Runtime and peak height predictions for one marked set.
struct OneSetPrediction {
    double t_star = 0.0;        // continuous argmax of the even envelope
    std::int64_t t_even = 0;    // t_star rounded to the nearest even step
    std::int64_t t_odd = 0;     // t_even + 1, the odd envelope's argmax
    double t_asymptotic = 0.0;  // (pi/2) sqrt(n1/k1)
    double p_even_max = 0.0;    // envelope maxima
    double p_odd_max = 0.0;
};
OneSetPrediction runtime_oneset(int n1, int n2, int k1, Init init);

} // namespace bipwalk
