#include "bipwalk/subspace.hpp"

#include "bipwalk/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bipwalk {

namespace {

// Canonical-prefix marking is assumed throughout the reduced machinery; the
// walk is symmetric under relabeling within each class, so nothing is lost.
void require_canonical(const MarkConfig& m, const char* where) {
    for (int i = 0; i < m.k1(); ++i)
        if (m.marked_x[i] != i)
            throw std::invalid_argument(std::string(where)
                + ": marks must be the canonical prefix (relabel vertices first)");
    for (int j = 0; j < m.k2(); ++j)
        if (m.marked_y[j] != j)
            throw std::invalid_argument(std::string(where)
                + ": marks must be the canonical prefix (relabel vertices first)");
}

void require_oneset(int n1, int n2, int k1, int k2, const char* where) {
    if (k2 != 0)
        throw std::invalid_argument(std::string(where) + ": expected k2 = 0");
    if (k1 < 1 || k1 > n1 - 1)
        throw DegenerateBasisError(std::string(where) + ": need 1 <= k1 <= n1-1 "
            "(k1=" + std::to_string(k1) + ", n1=" + std::to_string(n1)
            + " leaves an empty vertex class; use the full-space engine)");
    (void)n2;
}

void require_bothsets(int n1, int n2, int k1, int k2, const char* where) {
    if (k1 < 1 || k1 > n1 - 1 || k2 < 1 || k2 > n2 - 1)
        throw DegenerateBasisError(std::string(where)
            + ": need 1 <= k1 <= n1-1 and 1 <= k2 <= n2-1 "
            "(k1=" + std::to_string(k1) + "/" + std::to_string(n1)
            + ", k2=" + std::to_string(k2) + "/" + std::to_string(n2)
            + " leaves an empty vertex class; use the full-space engine)");
}

std::vector<cx> uniform_bundle(const GraphSpec& g,
                               int x_lo, int x_hi, int y_lo, int y_hi,
                               bool x_tailed) {
    std::vector<cx> v(static_cast<std::size_t>(g.arc_count()));
    const std::int64_t count =
        static_cast<std::int64_t>(x_hi - x_lo) * (y_hi - y_lo);
    const double a = 1.0 / std::sqrt(static_cast<double>(count));
    for (int x = x_lo; x < x_hi; ++x)
        for (int j = y_lo; j < y_hi; ++j) {
            const std::int64_t arc = x_tailed ? g.x_arc(x, j) : g.y_arc(j, x);
            v[static_cast<std::size_t>(arc)] = a;
        }
    return v;
}

} // namespace

SubspaceBasis basis_oneset(const MarkConfig& m) {
    const GraphSpec& g = m.graph;
    require_oneset(g.n1, g.n2, m.k1(), m.k2(), "basis_oneset");
    require_canonical(m, "basis_oneset");
    const int k = m.k1();
    SubspaceBasis b{SubspaceKind::OneSet4, g, m, {"ab", "ba", "bc", "cb"}, {}};
    b.vectors.push_back(uniform_bundle(g, 0, k, 0, g.n2, true));   // ab
    b.vectors.push_back(uniform_bundle(g, 0, k, 0, g.n2, false));  // ba
    b.vectors.push_back(uniform_bundle(g, k, g.n1, 0, g.n2, false)); // bc
    b.vectors.push_back(uniform_bundle(g, k, g.n1, 0, g.n2, true));  // cb
    return b;
}

SubspaceBasis basis_bothsets(const MarkConfig& m) {
    const GraphSpec& g = m.graph;
    require_bothsets(g.n1, g.n2, m.k1(), m.k2(), "basis_bothsets");
    require_canonical(m, "basis_bothsets");
    const int k1 = m.k1(), k2 = m.k2();
    SubspaceBasis b{SubspaceKind::BothSets8, g, m,
                    {"ab", "ad", "ba", "bc", "cb", "cd", "da", "dc"}, {}};
    b.vectors.push_back(uniform_bundle(g, 0, k1, 0, k2, true));        // ab
    b.vectors.push_back(uniform_bundle(g, 0, k1, k2, g.n2, true));     // ad
    b.vectors.push_back(uniform_bundle(g, 0, k1, 0, k2, false));       // ba
    b.vectors.push_back(uniform_bundle(g, k1, g.n1, 0, k2, false));    // bc
    b.vectors.push_back(uniform_bundle(g, k1, g.n1, 0, k2, true));     // cb
    b.vectors.push_back(uniform_bundle(g, k1, g.n1, k2, g.n2, true));  // cd
    b.vectors.push_back(uniform_bundle(g, 0, k1, k2, g.n2, false));    // da
    b.vectors.push_back(uniform_bundle(g, k1, g.n1, k2, g.n2, false)); // dc
    return b;
}

MarkedProb ReducedState::marked_probability() const {
    MarkedProb p;
    if (kind == SubspaceKind::OneSet4) {
        // Only the ab bundle sits on marked tails; ba points at marked heads
        // from unmarked Y vertices and does not count.
        p.p_x = std::norm(coords[0]);
        p.p_y = 0.0;
    } else {
        p.p_x = std::norm(coords[0]) + std::norm(coords[1]); // ab, ad
        p.p_y = std::norm(coords[2]) + std::norm(coords[3]); // ba, bc
    }
    p.p_total = p.p_x + p.p_y;
    return p;
}

ReducedState reduce_state(const WalkState& s, const SubspaceBasis& b,
                          double loss_tol) {
    if (s.graph != b.graph)
        throw std::invalid_argument("reduce_state: state belongs to a different graph");
    ReducedState r{b.kind, b.graph.n1, b.graph.n2,
                   b.marks.k1(), b.marks.k2(), {}};
    r.coords.reserve(b.vectors.size());
    for (const auto& v : b.vectors) {
        cx c = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            c += std::conj(v[i]) * s.amp[i];
        r.coords.push_back(c);
    }
    // Residual of the explicit remainder vector; the Pythagorean shortcut
    // sqrt(|s|^2 - |coords|^2) drowns in cancellation near zero loss.
    std::vector<cx> rem = s.amp;
    for (std::size_t bi = 0; bi < b.vectors.size(); ++bi) {
        const auto& v = b.vectors[bi];
        const cx c = r.coords[bi];
        for (std::size_t i = 0; i < v.size(); ++i) rem[i] -= c * v[i];
    }
    const double loss = vec_norm(rem);
    if (loss > loss_tol)
        throw ProjectionLossError(
            "reduce_state: state leaves the invariant subspace (residual "
            + std::to_string(loss) + ")", loss);
    return r;
}

ReducedState reduced_initial_state(const GraphSpec& g, int k1, int k2, Init init) {
    // Vertex start: Y-tailed bundles carry an extra sqrt(n2/n1) relative to
    // the X-tailed ones (each Y vertex spreads over n1 arcs, not n2). Edge
    // start weights every arc equally.
    const double n1 = g.n1, n2 = g.n2;
    if (k2 == 0) {
        require_oneset(g.n1, g.n2, k1, k2, "reduced_initial_state");
        ReducedState r{SubspaceKind::OneSet4, g.n1, g.n2, k1, k2, {}};
        const double k = k1, c = n1 - k1;
        if (init == Init::Vertices) {
            const double w = 1.0 / std::sqrt(n1 + n2);
            r.coords = {w * std::sqrt(k), w * std::sqrt(k * n2 / n1),
                        w * std::sqrt(c * n2 / n1), w * std::sqrt(c)};
        } else {
            const double w = 1.0 / std::sqrt(2.0 * n1);
            r.coords = {w * std::sqrt(k), w * std::sqrt(k),
                        w * std::sqrt(c), w * std::sqrt(c)};
        }
        return r;
    }
    require_bothsets(g.n1, g.n2, k1, k2, "reduced_initial_state");
    ReducedState r{SubspaceKind::BothSets8, g.n1, g.n2, k1, k2, {}};
    const double a = k1, c = n1 - k1, b = k2, d = n2 - k2;
    if (init == Init::Vertices) {
        const double w = 1.0 / std::sqrt(n1 + n2);
        r.coords = {w * std::sqrt(a * b / n2), w * std::sqrt(a * d / n2),
                    w * std::sqrt(a * b / n1), w * std::sqrt(b * c / n1),
                    w * std::sqrt(b * c / n2), w * std::sqrt(c * d / n2),
                    w * std::sqrt(a * d / n1), w * std::sqrt(c * d / n1)};
    } else {
        const double w = 1.0 / std::sqrt(2.0 * n1 * n2);
        r.coords = {w * std::sqrt(a * b), w * std::sqrt(a * d),
                    w * std::sqrt(a * b), w * std::sqrt(b * c),
                    w * std::sqrt(b * c), w * std::sqrt(c * d),
                    w * std::sqrt(a * d), w * std::sqrt(c * d)};
    }
    return r;
}

Matrix reduced_operator_oneset(int n1, int k1) {
    require_oneset(n1, 1, k1, 0, "reduced_operator_oneset");
    const double ct = 1.0 - 2.0 * k1 / n1;
    const double st = 2.0 / n1 * std::sqrt(static_cast<double>(k1) * (n1 - k1));
    Matrix m(4);
    // rows/cols in basis order ab, ba, bc, cb
    m(0, 1) = -ct; m(0, 2) = st;
    m(1, 0) = -1.0;
    m(2, 3) = 1.0;
    m(3, 1) = st; m(3, 2) = ct;
    return m;
}

Matrix reduced_operator_bothsets(int n1, int n2, int k1, int k2) {
    require_bothsets(n1, n2, k1, k2, "reduced_operator_bothsets");
    const double c1 = 1.0 - 2.0 * k1 / n1;
    const double s1 = 2.0 / n1 * std::sqrt(static_cast<double>(k1) * (n1 - k1));
    const double c2 = 1.0 - 2.0 * k2 / n2;
    const double s2 = 2.0 / n2 * std::sqrt(static_cast<double>(k2) * (n2 - k2));
    Matrix m(8);
    // rows/cols in basis order ab, ad, ba, bc, cb, cd, da, dc
    m(0, 2) = c1;  m(0, 3) = -s1;
    m(1, 6) = -c1; m(1, 7) = s1;
    m(2, 0) = c2;  m(2, 1) = -s2;
    m(3, 4) = -c2; m(3, 5) = s2;
    m(4, 2) = -s1; m(4, 3) = -c1;
    m(5, 6) = s1;  m(5, 7) = c1;
    m(6, 0) = -s2; m(6, 1) = -c2;
    m(7, 4) = s2;  m(7, 5) = c2;
    return m;
}

Matrix reduced_operator_conjugated(const SubspaceBasis& b) {
    const int n = static_cast<int>(b.vectors.size());
    Matrix m(n);
    for (int j = 0; j < n; ++j) {
        WalkState s(b.graph);
        s.amp = b.vectors[static_cast<std::size_t>(j)];
        step(s, b.marks);
        for (int i = 0; i < n; ++i) {
            cx c = 0.0;
            const auto& vi = b.vectors[static_cast<std::size_t>(i)];
            for (std::size_t a = 0; a < vi.size(); ++a)
                c += std::conj(vi[a]) * s.amp[a];
            m(i, j) = c;
        }
        // Invariance check on the explicit remainder; subtracting captured
        // weight from the total cannot resolve losses this small.
        for (int i = 0; i < n; ++i) {
            const cx c = m(i, j);
            const auto& vi = b.vectors[static_cast<std::size_t>(i)];
            for (std::size_t a = 0; a < vi.size(); ++a) s.amp[a] -= c * vi[a];
        }
        const double out = vec_norm(s.amp);
        if (out > 1e-9)
            throw ProjectionLossError(
                "reduced_operator_conjugated: basis is not invariant", out);
    }
    return m;
}

ProbabilityTrace reduced_evolve(ReducedState s, const Matrix& op,
                                std::int64_t steps) {
    if (steps < 0)
        throw std::invalid_argument("reduced_evolve: steps must be nonnegative");
    if (op.size() != static_cast<int>(s.coords.size()))
        throw std::invalid_argument("reduced_evolve: operator size mismatch");
    ProbabilityTrace tr;
    tr.rows.reserve(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t t = 0;; ++t) {
        const MarkedProb p = s.marked_probability();
        tr.rows.push_back({t, p.p_x, p.p_y, p.p_total});
        if (t == steps) break;
        s.coords = op * s.coords;
    }
    return tr;
}

ProbabilityTrace reduced_trace(const GraphSpec& g, int k1, int k2, Init init,
                               std::int64_t steps) {
    const ReducedState s0 = reduced_initial_state(g, k1, k2, init);
    const Matrix op = k2 == 0 ? reduced_operator_oneset(g.n1, k1)
                              : reduced_operator_bothsets(g.n1, g.n2, k1, k2);
    return reduced_evolve(s0, op, steps);
}

} // namespace bipwalk
