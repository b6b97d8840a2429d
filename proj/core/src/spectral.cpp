#include "bipwalk/spectral.hpp"

#include "bipwalk/subspace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bipwalk {

namespace {

void require_valid_oneset(int n1, int k1) {
    if (n1 < 2 || k1 < 1 || k1 > n1 - 1)
        throw std::invalid_argument("one-set spectral forms need 1 <= k1 <= n1-1");
}

} // namespace

OneSetAngles oneset_angles(int n1, int k1) {
    require_valid_oneset(n1, k1);
    const double phi = std::asin(std::sqrt(static_cast<double>(k1) / n1));
    return {2.0 * phi, phi};
}

std::vector<EigenPair> exact_eigensystem_oneset(int n1, int k1) {
    const double phi = oneset_angles(n1, k1).phi;
    const cx i{0.0, 1.0};
    const cx ep = std::exp(i * phi);  // e^{+i phi}
    const cx em = std::conj(ep);

    // Eigenvectors over (ab, ba, bc, cb); each eigenvalue has unit modulus
    // and phase +-phi around +-1.
    std::vector<EigenPair> sys(4);
    sys[0] = {-em, {i, i * ep, -ep, 1.0}};
    sys[1] = {em, {i, -i * ep, ep, 1.0}};
    sys[2] = {-ep, {-i, -i * em, -em, 1.0}};
    sys[3] = {ep, {-i, i * em, em, 1.0}};
    for (auto& p : sys)
        for (cx& c : p.vector) c *= 0.5;
    return sys;
}

std::vector<cx> decompose_initial_oneset(int n1, int n2, int k1, Init init) {
    const ReducedState s0 =
        reduced_initial_state(GraphSpec(n1, n2), k1, 0, init);
    std::vector<cx> coeffs;
    coeffs.reserve(4);
    for (const EigenPair& p : exact_eigensystem_oneset(n1, k1))
        coeffs.push_back(vec_dot(p.vector, s0.coords));
    return coeffs;
}

OneSetProb closed_form_prob_oneset(int n1, int n2, int k1, Init init,
                                   std::int64_t t) {
    require_valid_oneset(n1, k1);
    if (n2 < 1) throw std::invalid_argument("closed_form_prob_oneset: n2 < 1");
    if (t < 0) throw std::invalid_argument("closed_form_prob_oneset: t < 0");
    const double phi = std::asin(std::sqrt(static_cast<double>(k1) / n1));
    // Marked amplitude is sqrt(n1) sin((t+1) phi) at even t and
    // sqrt(n2) sin(t phi) at odd t for the vertex start (the sqrt(n2) weight
    // cancels for the edge start); both envelopes sit in p_x.
    OneSetProb p;
    const bool even = (t % 2) == 0;
    const double s = even ? std::sin((t + 1) * phi) : std::sin(t * phi);
    if (init == Init::Vertices)
        p.p_x = (even ? n1 : n2) * s * s / (n1 + n2);
    else
        p.p_x = 0.5 * s * s;
    p.p_total = p.p_x;
    return p;
}

OneSetPrediction runtime_oneset(int n1, int n2, int k1, Init init) {
    require_valid_oneset(n1, k1);
    if (n2 < 1) throw std::invalid_argument("runtime_oneset: n2 < 1");
    const double phi = std::asin(std::sqrt(static_cast<double>(k1) / n1));
    OneSetPrediction pred;
    pred.t_star = std::acos(std::sqrt(static_cast<double>(k1) / n1)) / phi;
    pred.t_even = 2 * std::llround(0.5 * pred.t_star);
    pred.t_odd = pred.t_even + 1;
    pred.t_asymptotic =
        std::numbers::pi / 2.0 * std::sqrt(static_cast<double>(n1) / k1);
    if (init == Init::Vertices) {
        pred.p_even_max = static_cast<double>(n1) / (n1 + n2);
        pred.p_odd_max = static_cast<double>(n2) / (n1 + n2);
    } else {
        pred.p_even_max = 0.5;
        pred.p_odd_max = 0.5;
    }
    return pred;
}

} // namespace bipwalk
