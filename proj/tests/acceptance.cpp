// Acceptance gate: one pass/fail line per criterion, details indented.
// Every number printed is measured in this run; bounds are stated next to the
// measurements. The binary exits nonzero when any criterion fails.

#include "bipwalk/bipwalk.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <utility>
#include <random>
#include <string>
#include <vector>

using namespace bipwalk;

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

struct Criterion {
    int number;
    std::string title;
    bool pass = true;
    std::vector<std::string> lines;

    void require(bool ok, const std::string& detail) {
        if (!ok) pass = false;
        lines.push_back(std::string(ok ? "ok   " : "BAD  ") + detail);
    }
    void note(const std::string& s) { lines.push_back("note " + s); }
};

void report(const Criterion& c, int& failed) {
    if (!c.pass) ++failed;
    std::printf("[%s] criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.number,
                c.title.c_str());
    for (const std::string& l : c.lines) std::printf("    %s\n", l.c_str());
}

double max_trace_dev(const ProbabilityTrace& a, const ProbabilityTrace& b) {
    double m = 0.0;
    const std::size_t n = std::min(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < n; ++i) {
        m = std::max(m, std::abs(a.rows[i].p_x - b.rows[i].p_x));
        m = std::max(m, std::abs(a.rows[i].p_y - b.rows[i].p_y));
        m = std::max(m, std::abs(a.rows[i].p_total - b.rows[i].p_total));
    }
    return m;
}

ProbabilityTrace full_trace(int n1, int n2, int k1, int k2, Init init,
                            std::int64_t steps) {
    const GraphSpec g(n1, n2);
    return evolve(initial_state(g, init), mark(g, k1, k2), steps);
}

// ------------------------------------------------------------ criteria 1..7

Criterion criterion1() {
    Criterion c{1, "balanced one-set search, vertex start, full engine"};
    const auto t0 = std::chrono::steady_clock::now();
    const ProbabilityTrace tr = full_trace(400, 400, 3, 0, Init::Vertices, 40);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const TracePeak peak = trace_max(tr, TraceColumn::Total);
    c.require(std::abs(peak.p - 0.50) <= 0.02,
              fmt("peak p_total = %.6f (required 0.50 +- 0.02)", peak.p));
    c.require(std::llabs(peak.t - 18) <= 1,
              fmt("peak time t = %lld (required 18 +- 1)",
                  static_cast<long long>(peak.t)));
    c.require(secs < 1.0,
              fmt("40-step trace on 320000 arcs took %.3f s (required < 1 s)",
                  secs));
    return c;
}

Criterion criterion2() {
    Criterion c{2, "half-size second set, vertex start, parity split"};
    const ProbabilityTrace tr = full_trace(400, 200, 3, 0, Init::Vertices, 25);
    const double p18 = tr.rows[18].p_total, p19 = tr.rows[19].p_total;
    c.require(std::abs(p18 - 0.667) <= 0.01,
              fmt("p(18) = %.6f (required 0.667 +- 0.01)", p18));
    c.require(std::abs(p19 - 0.333) <= 0.01,
              fmt("p(19) = %.6f (required 0.333 +- 0.01)", p19));
    return c;
}

Criterion criterion3() {
    Criterion c{3, "minimal second set, vertex start, runtime independence"};
    const ProbabilityTrace tr = full_trace(400, 1, 3, 0, Init::Vertices, 40);
    const double p18 = tr.rows[18].p_total, p19 = tr.rows[19].p_total;
    c.require(std::abs(p18 - 0.998) <= 0.002,
              fmt("p(18) = %.6f (required 0.998 +- 0.002)", p18));
    c.require(std::abs(p19 - 0.002) <= 0.002,
              fmt("p(19) = %.6f (required 0.002 +- 0.002)", p19));
    for (const int n2 : {1, 200, 400}) {
        const ProbabilityTrace t2 = full_trace(400, n2, 3, 0, Init::Vertices, 40);
        const TracePeak peak = trace_max(t2, TraceColumn::Total);
        c.require(peak.t == 18,
                  fmt("peak time for n2 = %d is t = %lld (required 18)", n2,
                      static_cast<long long>(peak.t)));
    }
    if (!c.pass) {
        const double phi = oneset_angles(400, 3).phi;
        c.note(fmt("even steps follow (n1/(n1+n2)) sin^2((t+1) phi); the "
                   "envelope ceiling 400/401 = %.6f needs (t+1) phi = pi/2, "
                   "i.e. t = %.2f, which is not an integer step",
                   400.0 / 401.0, std::numbers::pi / (2.0 * phi) - 1.0));
        c.note(fmt("the best integer step is t = 18 with p = %.6f; no integer "
                   "step reaches the 0.996 floor of the stated band",
                   p18));
    }
    return c;
}

Criterion criterion4() {
    Criterion c{4, "edge start collapses the one-set family to one trace"};
    std::vector<ProbabilityTrace> traces;
    for (const int n2 : {400, 200, 1})
        traces.push_back(full_trace(400, n2, 3, 0, Init::Edges, 40));
    double dev = 0.0;
    for (std::size_t i = 0; i < traces.size(); ++i)
        for (std::size_t j = i + 1; j < traces.size(); ++j)
            dev = std::max(dev, max_trace_dev(traces[i], traces[j]));
    c.require(dev < 1e-9,
              fmt("max pairwise trace deviation over n2 in {400, 200, 1} = "
                  "%.3e (required < 1e-9)",
                  dev));
    const TracePeak peak = trace_max(traces.front(), TraceColumn::Total);
    c.require(std::abs(peak.p - 0.50) <= 0.01,
              fmt("peak p_total = %.6f at t = %lld (required 0.50 +- 0.01)",
                  peak.p, static_cast<long long>(peak.t)));
    return c;
}

Criterion criterion5() {
    Criterion c{5, "resonant both-sets search, vertex start"};
    const ProbabilityTrace tr = full_trace(600, 400, 3, 2, Init::Vertices, 40);
    const TracePeak peak = trace_max(tr, TraceColumn::Total);
    c.require(peak.p >= 0.95,
              fmt("peak p_total = %.6f (required >= 0.95)", peak.p));
    c.require(std::llabs(peak.t - 16) <= 2,
              fmt("peak time t = %lld (required 16 +- 2)",
                  static_cast<long long>(peak.t)));
    if (!c.pass) {
        double window = 0.0;
        for (std::int64_t t = 14; t <= 18; ++t)
            window = std::max(window, tr.rows[static_cast<std::size_t>(t)].p_total);
        const BothSetsAngles ang = bothsets_angles(600, 400, 3, 2);
        c.note(fmt("best value inside t in [14, 18] is %.6f, under the 0.95 "
                   "floor; the crest sits at t = pi/alpha = %.2f with alpha = "
                   "arcsin(sqrt(3/600) + sqrt(2/400)) = %.4f",
                   window, std::numbers::pi / ang.alpha, ang.alpha));
        c.note("the 16 +- 2 window comes from pi/(2 sqrt(2)) sqrt(200) = 15.7, "
               "which is shorter than pi/alpha by a factor sqrt(2); the serial "
               "oracle crests once per pi/alpha steps");
    }
    return c;
}

Criterion criterion6() {
    Criterion c{6, "off-resonance both-sets search, vertex start"};
    const ProbabilityTrace tr = full_trace(400, 600, 3, 2, Init::Vertices, 60);
    const double tx_pred = std::numbers::pi / 2.0 * std::sqrt(400.0 / 3.0);
    const double ty_pred = std::numbers::pi / 2.0 * std::sqrt(600.0 / 2.0);
    const auto px = first_peak(tr, TraceColumn::X);
    const auto py = first_peak(tr, TraceColumn::Y);
    c.require(px && std::abs(px->p - 0.60) <= 0.03,
              fmt("first X-set peak p = %.6f (required 0.60 +- 0.03)",
                  px ? px->p : -1.0));
    c.require(px && std::abs(px->t - tx_pred) <= 2.0,
              fmt("first X-set peak t = %lld (required within 2 of %.2f)",
                  px ? static_cast<long long>(px->t) : -1, tx_pred));
    c.require(py && std::abs(py->p - 0.60) <= 0.03,
              fmt("first Y-set peak p = %.6f (required 0.60 +- 0.03)",
                  py ? py->p : -1.0));
    c.require(py && std::abs(py->t - ty_pred) <= 2.0,
              fmt("first Y-set peak t = %lld (required within 2 of %.2f)",
                  py ? static_cast<long long>(py->t) : -1, ty_pred));
    const TracePeak total = trace_max(tr, TraceColumn::Total);
    c.require(total.p < 0.9,
              fmt("max p_total = %.6f at t = %lld (required < 0.9)", total.p,
                  static_cast<long long>(total.t)));
    if (!c.pass)
        c.note("the two per-set crests lie 7 steps apart while each is about "
               "11 steps wide at the 0.45 level, so between them the sum "
               "exceeds 0.9 even though the crests are misaligned");
    return c;
}

Criterion criterion7() {
    Criterion c{7, "edge start both-sets suite"};
    const std::array<std::array<int, 2>, 3> sizes{{{400, 600}, {600, 400}, {3, 997}}};
    for (const auto& nn : sizes) {
        const ProbabilityTrace tr = full_trace(nn[0], nn[1], 3, 2, Init::Edges, 40);
        const auto px = first_peak(tr, TraceColumn::X);
        const auto py = first_peak(tr, TraceColumn::Y);
        c.require(px && std::abs(px->p - 0.50) <= 0.02,
                  fmt("(%d, %d): first X-set peak p = %.6f (required 0.50 +- "
                      "0.02)",
                      nn[0], nn[1], px ? px->p : -1.0));
        c.require(py && std::abs(py->p - 0.50) <= 0.02,
                  fmt("(%d, %d): first Y-set peak p = %.6f (required 0.50 +- "
                      "0.02)",
                      nn[0], nn[1], py ? py->p : -1.0));
        if (nn[0] == 600) {
            const TracePeak total = trace_max(tr, TraceColumn::Total);
            c.require(total.p >= 0.95,
                      fmt("(600, 400): max p_total = %.6f (required >= 0.95)",
                          total.p));
        }
    }
    return c;
}

// ----------------------------------------------------------- criteria 8..10

Criterion criterion8() {
    Criterion c{8, "full-space vs reduced-space equivalence, random configs"};
    std::mt19937_64 rng(20260816ull);
    const auto draw = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    double worst_reduced = 0.0, worst_closed = 0.0;
    int configs = 0, oneset = 0;
    for (int i = 0; i < 22; ++i) {
        const bool bothsets = i >= 12;
        const int n1 = draw(10, 500), n2 = draw(10, 500);
        const int k1 = draw(1, n1 - 1);
        const int k2 = bothsets ? draw(1, n2 - 1) : 0;
        const Init init = i % 2 ? Init::Edges : Init::Vertices;
        const GraphSpec g(n1, n2);
        const ProbabilityTrace full =
            evolve(initial_state(g, init), mark(g, k1, k2), 100);
        const ProbabilityTrace red = reduced_trace(g, k1, k2, init, 100);
        worst_reduced = std::max(worst_reduced, max_trace_dev(full, red));
        ++configs;
        if (k2 == 0) {
            ++oneset;
            for (const TraceRow& r : full.rows) {
                const OneSetProb p =
                    closed_form_prob_oneset(n1, n2, k1, init, r.t);
                worst_closed = std::max({worst_closed, std::abs(p.p_x - r.p_x),
                                         std::abs(p.p_total - r.p_total)});
            }
        }
    }
    c.require(worst_reduced < 1e-9,
              fmt("worst per-timestep deviation over %d seeded configs x 100 "
                  "steps = %.3e (required < 1e-9)",
                  configs, worst_reduced));
    c.require(worst_closed < 1e-9,
              fmt("worst closed-form deviation over the %d one-set configs = "
                  "%.3e (required < 1e-9)",
                  oneset, worst_closed));
    return c;
}

Criterion criterion9() {
    Criterion c{9, "eigensystems: exact forms, perturbative solver, scaling"};
    for (const auto& [n1, k1] : {std::pair{400, 3}, std::pair{50, 4}}) {
        const Matrix u = reduced_operator_oneset(n1, k1);
        double worst = 0.0;
        for (const EigenPair& p : exact_eigensystem_oneset(n1, k1)) {
            std::vector<cx> r = u * p.vector;
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= p.value * p.vector[i];
            worst = std::max(worst, vec_norm(r));
        }
        c.require(worst < 1e-12,
                  fmt("one-set (%d, %d): worst exact eigenpair residual = "
                      "%.3e (required < 1e-12)",
                      n1, k1, worst));
    }

    for (const auto& cfg : {std::array<int, 4>{1000, 3000, 1, 2},
                            std::array<int, 4>{500, 400, 2, 3}}) {
        const auto pert =
            perturbative_eigensystem_bothsets(cfg[0], cfg[1], cfg[2], cfg[3]);
        const auto closed =
            asymptotic_eigensystem_bothsets(cfg[0], cfg[1], cfg[2], cfg[3]);
        double ldev = 0.0, vdev = 0.0;
        for (std::size_t j = 0; j < pert.size(); ++j) {
            ldev = std::max(ldev, std::abs(pert[j].value - closed[j].value));
            std::vector<cx> a = pert[j].vector, b = closed[j].vector;
            canonicalize_phase(a);
            canonicalize_phase(b);
            vdev = std::max(vdev, vec_max_abs_diff(a, b));
        }
        c.require(ldev < 1e-10 && vdev < 1e-10,
                  fmt("(%d, %d, %d, %d): perturbative vs closed form, "
                      "eigenvalue dev = %.3e, eigenvector dev = %.3e "
                      "(required < 1e-10)",
                      cfg[0], cfg[1], cfg[2], cfg[3], ldev, vdev));
    }

    // Residual against the exact operator falls like n^(-1/2) at fixed k.
    std::vector<double> lx, ly;
    for (const int n : {1000, 10000, 100000, 1000000}) {
        const Matrix u = reduced_operator_bothsets(n, n, 1, 1);
        double worst = 0.0;
        for (const EigenPair& p : perturbative_eigensystem_bothsets(n, n, 1, 1)) {
            std::vector<cx> r = u * p.vector;
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= p.value * p.vector[i];
            worst = std::max(worst, vec_norm(r));
        }
        lx.push_back(std::log(static_cast<double>(n)));
        ly.push_back(std::log(worst));
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(ly.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = num / den;
    c.require(std::abs(slope + 0.5) <= 0.05,
              fmt("log-log residual slope over n in {1e3..1e6}, k1 = k2 = 1: "
                  "%.4f (required -0.5 +- 0.05)",
                  slope));
    return c;
}

Criterion criterion10() {
    Criterion c{10, "unitarity and involutions"};
    {
        const GraphSpec g(50, 30);
        const MarkConfig m = mark(g, 3, 2);
        WalkState s = initial_state_vertices(g);
        for (int t = 0; t < 1000; ++t) step(s, m);
        const double drift = std::abs(s.norm() - 1.0);
        c.require(drift < 1e-10,
                  fmt("1000-step norm drift on (50, 30, 3, 2) = %.3e "
                      "(required < 1e-10)",
                      drift));
    }
    {
        const GraphSpec g(13, 7);
        const MarkConfig m = mark(g, 2, 3);
        std::mt19937_64 rng(7);
        std::normal_distribution<double> gauss;
        WalkState ref(g);
        for (cx& a : ref.amp) a = cx(gauss(rng), gauss(rng));
        const double nrm = ref.norm();
        for (cx& a : ref.amp) a /= nrm;

        const auto twice_dev = [&](void (*op)(WalkState&)) {
            WalkState s = ref;
            op(s);
            op(s);
            double dev = 0.0;
            for (std::size_t i = 0; i < s.amp.size(); ++i)
                dev = std::max(dev, std::abs(s.amp[i] - ref.amp[i]));
            return dev;
        };
        WalkState so = ref;
        apply_oracle(so, m);
        apply_oracle(so, m);
        double odev = 0.0;
        for (std::size_t i = 0; i < so.amp.size(); ++i)
            odev = std::max(odev, std::abs(so.amp[i] - ref.amp[i]));
        const double cdev = twice_dev(&apply_coin);
        const double sdev = twice_dev(&apply_shift);
        c.require(odev <= 1e-12,
                  fmt("oracle applied twice: max deviation = %.3e (required "
                      "<= 1e-12)",
                      odev));
        c.require(cdev <= 1e-12,
                  fmt("coin applied twice: max deviation = %.3e (required <= "
                      "1e-12)",
                      cdev));
        c.require(sdev <= 1e-12,
                  fmt("shift applied twice: max deviation = %.3e (required "
                      "<= 1e-12)",
                      sdev));
    }
    return c;
}

} // namespace

int main() {
    int failed = 0;
    report(criterion1(), failed);
    report(criterion2(), failed);
    report(criterion3(), failed);
    report(criterion4(), failed);
    report(criterion5(), failed);
    report(criterion6(), failed);
    report(criterion7(), failed);
    report(criterion8(), failed);
    report(criterion9(), failed);
    report(criterion10(), failed);
    std::printf("%d of 10 criteria passed, %d failed\n", 10 - failed, failed);
    return failed == 0 ? 0 : 1;
}
