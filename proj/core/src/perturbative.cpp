#include "bipwalk/perturbative.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bipwalk {

namespace {

void require_valid(int n1, int n2, int k1, int k2) {
    if (k1 < 1 || k1 > n1 - 1 || k2 < 1 || k2 > n2 - 1)
        throw std::invalid_argument(
            "both-sets spectral forms need 1 <= k_i <= n_i - 1");
}

// Degenerate eigenbasis of the unmarked operator, +1 block then -1 block.
// Entries over (ab, ad, ba, bc, cb, cd, da, dc).
const double R = 1.0 / std::numbers::sqrt2;
const double kDegenerate[8][8] = {
    {0, 0, 0, 0, 0, R, 0, R},
    {0, -R, 0, 0, 0, 0, R, 0},
    {0, 0, 0, -R, R, 0, 0, 0},
    {R, 0, R, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -R, 0, R},
    {0, R, 0, 0, 0, 0, R, 0},
    {0, 0, 0, R, R, 0, 0, 0},
    {-R, 0, R, 0, 0, 0, 0, 0},
};

// The step operator expanded to first order in sqrt(k_i/n_i): the structure
// of the exact reduced operator with cos -> 1 and sin -> 2 sqrt(k_i/n_i).
Matrix first_order_operator(double e1, double e2) {
    Matrix m(8);
    m(0, 2) = 1.0;  m(0, 3) = -e1;
    m(1, 6) = -1.0; m(1, 7) = e1;
    m(2, 0) = 1.0;  m(2, 1) = -e2;
    m(3, 4) = -1.0; m(3, 5) = e2;
    m(4, 2) = -e1;  m(4, 3) = -1.0;
    m(5, 6) = e1;   m(5, 7) = 1.0;
    m(6, 0) = -e2;  m(6, 1) = -1.0;
    m(7, 4) = e2;   m(7, 5) = 1.0;
    return m;
}

void sort_block_by_phase(std::vector<EigenPair>& block) {
    std::sort(block.begin(), block.end(), [](const EigenPair& a, const EigenPair& b) {
        return std::arg(a.value) < std::arg(b.value);
    });
}

} // namespace

BothSetsAngles bothsets_angles(int n1, int n2, int k1, int k2) {
    require_valid(n1, n2, k1, k2);
    const double s1 = std::sqrt(static_cast<double>(k1) / n1);
    const double s2 = std::sqrt(static_cast<double>(k2) / n2);
    if (s1 + s2 > 1.0)
        throw std::invalid_argument(
            "bothsets_angles: sqrt(k1/n1) + sqrt(k2/n2) > 1, outside the "
            "perturbative regime");
    BothSetsAngles a;
    a.alpha = std::asin(s2 + s1);
    a.beta = std::asin(s2 - s1);
    a.regime_score = std::max(s1, s2);
    return a;
}

std::vector<EigenPair> perturbative_eigensystem_bothsets(int n1, int n2,
                                                         int k1, int k2) {
    require_valid(n1, n2, k1, k2);
    const double e1 = 2.0 * std::sqrt(static_cast<double>(k1) / n1);
    const double e2 = 2.0 * std::sqrt(static_cast<double>(k2) / n2);
    const Matrix u1 = first_order_operator(e1, e2);

    std::vector<EigenPair> out;
    out.reserve(8);
    for (int block = 0; block < 2; ++block) {
        const double sign = block == 0 ? 1.0 : -1.0;
        // Project the first-order operator onto the degenerate eigenspace.
        Matrix eff(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                cx acc = 0.0;
                for (int r = 0; r < 8; ++r) {
                    cx row = 0.0;
                    for (int c = 0; c < 8; ++c)
                        row += u1(r, c) * kDegenerate[4 * block + j][c];
                    acc += kDegenerate[4 * block + i][r] * row;
                }
                eff(i, j) = acc;
            }
        const EigenSystem es = eigensystem_normal(eff);
        std::vector<EigenPair> pairs(4);
        for (int j = 0; j < 4; ++j) {
            // The block eigenvalue is sign + i y to first order; complete it
            // to unit modulus keeping the imaginary part.
            const double y = es.values[static_cast<std::size_t>(j)].imag();
            const double re = sign * std::sqrt(std::max(0.0, 1.0 - y * y));
            pairs[static_cast<std::size_t>(j)].value = cx(re, y);
            std::vector<cx> v(8);
            for (int r = 0; r < 8; ++r) {
                cx acc = 0.0;
                for (int i = 0; i < 4; ++i)
                    acc += kDegenerate[4 * block + i][r] * es.vectors(i, j);
                v[static_cast<std::size_t>(r)] = acc;
            }
            pairs[static_cast<std::size_t>(j)].vector = std::move(v);
        }
        sort_block_by_phase(pairs);
        for (auto& p : pairs) out.push_back(std::move(p));
    }
    return out;
}

std::vector<EigenPair> asymptotic_eigensystem_bothsets(int n1, int n2,
                                                       int k1, int k2) {
    const BothSetsAngles ang = bothsets_angles(n1, n2, k1, k2);
    const cx i{0.0, 1.0};
    const double w = 0.5 / std::numbers::sqrt2;
    const cx ea = std::exp(i * ang.alpha);
    const cx eb = std::exp(i * ang.beta);

    // Eigenvectors over (ab, ad, ba, bc, cb, cd, da, dc); parameter free.
    std::vector<EigenPair> plus{
        {std::conj(ea), {1, i, 1, i, -i, 1, -i, 1}},
        {ea, {1, -i, 1, -i, i, 1, i, 1}},
        {std::conj(eb), {1, i, 1, -i, i, -1, -i, -1}},
        {eb, {1, -i, 1, i, -i, -1, i, -1}},
    };
    std::vector<EigenPair> minus{
        {-std::conj(ea), {-1, -i, 1, i, i, -1, -i, 1}},
        {-ea, {-1, i, 1, -i, -i, -1, i, 1}},
        {-std::conj(eb), {-1, -i, 1, -i, -i, 1, -i, -1}},
        {-eb, {-1, i, 1, i, i, 1, i, -1}},
    };
    for (auto* block : {&plus, &minus}) {
        for (auto& p : *block)
            for (cx& c : p.vector) c *= w;
        sort_block_by_phase(*block);
    }
    std::vector<EigenPair> out;
    out.reserve(8);
    for (auto& p : plus) out.push_back(std::move(p));
    for (auto& p : minus) out.push_back(std::move(p));
    return out;
}

BothSetsProb asymptotic_prob_bothsets(int n1, int n2, int k1, int k2,
                                      Init init, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("asymptotic_prob_bothsets: t < 0");
    const BothSetsAngles ang = bothsets_angles(n1, n2, k1, k2);
    const double sx = std::sin(0.5 * (ang.alpha - ang.beta) * t);
    const double sy = std::sin(0.5 * (ang.alpha + ang.beta) * t);
    BothSetsProb p;
    if (init == Init::Vertices) {
        const bool even = (t % 2) == 0;
        const double wx = even ? n1 : n2;
        const double wy = even ? n2 : n1;
        p.p_x = wx * sx * sx / (n1 + n2);
        p.p_y = wy * sy * sy / (n1 + n2);
    } else {
        p.p_x = 0.5 * sx * sx;
        p.p_y = 0.5 * sy * sy;
    }
    p.p_total = p.p_x + p.p_y;
    return p;
}

BothSetsPrediction runtimes_bothsets(int n1, int n2, int k1, int k2, Init init) {
    const BothSetsAngles ang = bothsets_angles(n1, n2, k1, k2);
    BothSetsPrediction pred;
    pred.t_x = std::numbers::pi / (ang.alpha - ang.beta);
    pred.t_y = std::numbers::pi / (ang.alpha + ang.beta);
    pred.t_x_small_angle =
        std::numbers::pi / 2.0 * std::sqrt(static_cast<double>(n1) / k1);
    pred.t_y_small_angle =
        std::numbers::pi / 2.0 * std::sqrt(static_cast<double>(n2) / k2);
    pred.resonant = static_cast<std::int64_t>(k1) * n2
                 == static_cast<std::int64_t>(k2) * n1;
    if (init == Init::Vertices) {
        pred.p_x_max = static_cast<double>(std::max(n1, n2)) / (n1 + n2);
        pred.p_y_max = pred.p_x_max;
    } else {
        pred.p_x_max = 0.5;
        pred.p_y_max = 0.5;
    }
    return pred;
}

} // namespace bipwalk
