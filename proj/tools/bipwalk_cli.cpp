// Command line harness: simulation runs, self-validation, regime summary
// tables, and the canonical figure sweeps. CSV in, CSV out, no network.

#include "bipwalk/bipwalk.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bw = bipwalk;

namespace {

struct RunOptions {
    int n1 = 0, n2 = 0, k1 = 0, k2 = 0;
    std::string init = "vertices";
    std::string engine = "full";
    std::int64_t steps = 50;
    std::string out = "-";
    std::uint64_t seed = 0; // reserved for seeded suites; run itself is deterministic
};

bw::Init parse_init(const std::string& s) {
    return s == "edges" ? bw::Init::Edges : bw::Init::Vertices;
}

void write_output(const std::string& path, const std::string& body) {
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << body;
}

std::string trace_to_csv(const bw::ProbabilityTrace& tr) {
    std::ostringstream ss;
    bw::write_trace_csv(ss, tr);
    return ss.str();
}

bw::ProbabilityTrace swap_sets(const bw::ProbabilityTrace& tr) {
    bw::ProbabilityTrace out;
    out.rows.reserve(tr.rows.size());
    for (const bw::TraceRow& r : tr.rows)
        out.rows.push_back({r.t, r.p_y, r.p_x, r.p_total});
    return out;
}

bw::ProbabilityTrace run_trace(const RunOptions& opt) {
    const bw::GraphSpec g(opt.n1, opt.n2);
    const bw::Init init = parse_init(opt.init);

    if (opt.engine == "full") {
        const bw::MarkConfig m = bw::mark(g, opt.k1, opt.k2);
        return bw::evolve(bw::initial_state(g, init), m, opt.steps);
    }

    // The reduced and analytic engines assume marks in X; a configuration
    // marked only in Y is handled by exchanging the partite sets.
    const bool exchanged = opt.k1 == 0 && opt.k2 > 0;
    const bw::GraphSpec ge = exchanged ? bw::GraphSpec(g.n2, g.n1) : g;
    const int k1 = exchanged ? opt.k2 : opt.k1;
    const int k2 = exchanged ? 0 : opt.k2;

    bw::ProbabilityTrace tr;
    if (opt.engine == "reduced") {
        tr = bw::reduced_trace(ge, k1, k2, init, opt.steps);
    } else if (k2 == 0) {
        for (std::int64_t t = 0; t <= opt.steps; ++t) {
            const bw::OneSetProb p =
                bw::closed_form_prob_oneset(ge.n1, ge.n2, k1, init, t);
            tr.rows.push_back({t, p.p_x, p.p_y, p.p_total});
        }
    } else {
        for (std::int64_t t = 0; t <= opt.steps; ++t) {
            const bw::BothSetsProb p =
                bw::asymptotic_prob_bothsets(ge.n1, ge.n2, k1, k2, init, t);
            tr.rows.push_back({t, p.p_x, p.p_y, p.p_total});
        }
    }
    return exchanged ? swap_sets(tr) : tr;
}

// ---------------------------------------------------------------- validate

struct Report {
    std::ostringstream body;
    int checks = 0;
    int failures = 0;

    void value(const std::string& key, double v) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.6e", v);
        body << key << "=" << buf << "\n";
    }
    void check(const std::string& key, double v, double bound) {
        ++checks;
        const bool ok = v <= bound;
        if (!ok) ++failures;
        value(key, v);
        value(key + "_bound", bound);
        body << key << "_pass=" << (ok ? 1 : 0) << "\n";
    }
    void check_flag(const std::string& key, bool ok) {
        ++checks;
        if (!ok) ++failures;
        body << key << "_pass=" << (ok ? 1 : 0) << "\n";
    }
};

struct FigureConfig {
    std::string name;
    int n1, n2, k1, k2;
    std::int64_t steps;
};

const std::vector<FigureConfig>& reference_grid() {
    static const std::vector<FigureConfig> grid = {
        {"oneset_400x400", 400, 400, 3, 0, 50},
        {"oneset_400x200", 400, 200, 3, 0, 50},
        {"oneset_400x1", 400, 1, 3, 0, 50},
        {"oneset_200x400", 200, 400, 3, 0, 50},
        {"oneset_3x400", 3, 400, 3, 0, 50},
        {"bothsets_400x600", 400, 600, 3, 2, 80},
        {"bothsets_600x400", 600, 400, 3, 2, 80},
        {"bothsets_3x997", 3, 997, 3, 2, 80},
    };
    return grid;
}

bool reducible(const FigureConfig& f) {
    const bool ok1 = f.k1 >= 1 && f.k1 <= f.n1 - 1;
    const bool ok2 = f.k2 == 0 || (f.k2 >= 1 && f.k2 <= f.n2 - 1);
    return ok1 && ok2;
}

double max_trace_dev(const bw::ProbabilityTrace& a, const bw::ProbabilityTrace& b) {
    double m = 0.0;
    const std::size_t n = std::min(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < n; ++i) {
        m = std::max(m, std::abs(a.rows[i].p_x - b.rows[i].p_x));
        m = std::max(m, std::abs(a.rows[i].p_y - b.rows[i].p_y));
        m = std::max(m, std::abs(a.rows[i].p_total - b.rows[i].p_total));
    }
    return m;
}

void validate_figure_configs(Report& rep) {
    for (const FigureConfig& f : reference_grid()) {
        const bw::GraphSpec g(f.n1, f.n2);
        const bw::MarkConfig m = bw::mark(g, f.k1, f.k2);
        for (const bw::Init init : {bw::Init::Vertices, bw::Init::Edges}) {
            const std::string tag = "grid." + f.name
                + (init == bw::Init::Vertices ? ".vertices" : ".edges");

            bw::WalkState s = bw::initial_state(g, init);
            const bw::ProbabilityTrace full = bw::evolve(s, m, f.steps);
            for (std::int64_t t = 0; t < f.steps; ++t) bw::step(s, m);
            rep.check(tag + ".norm_drift", std::abs(s.norm() - 1.0), 1e-10);

            if (!reducible(f)) continue;
            const bw::ProbabilityTrace red =
                bw::reduced_trace(g, f.k1, f.k2, init, f.steps);
            rep.check(tag + ".full_vs_reduced", max_trace_dev(full, red), 1e-9);

            if (f.k2 == 0) {
                double dev = 0.0;
                for (const bw::TraceRow& r : full.rows) {
                    const bw::OneSetProb p =
                        bw::closed_form_prob_oneset(f.n1, f.n2, f.k1, init, r.t);
                    dev = std::max(dev, std::abs(r.p_total - p.p_total));
                }
                rep.check(tag + ".full_vs_closed_form", dev, 1e-9);
            } else {
                // First-order formulas: pointwise agreement degrades like
                // sqrt(k/n), peak heights much faster.
                const bw::BothSetsAngles ang =
                    bw::bothsets_angles(f.n1, f.n2, f.k1, f.k2);
                double dev = 0.0;
                for (const bw::TraceRow& r : full.rows) {
                    const bw::BothSetsProb p = bw::asymptotic_prob_bothsets(
                        f.n1, f.n2, f.k1, f.k2, init, r.t);
                    dev = std::max({dev, std::abs(r.p_x - p.p_x),
                                    std::abs(r.p_y - p.p_y)});
                }
                rep.check(tag + ".asym_pointwise_dev", dev, ang.regime_score);

                const bw::BothSetsPrediction pred =
                    bw::runtimes_bothsets(f.n1, f.n2, f.k1, f.k2, init);
                if (pred.resonant) {
                    const auto peak = bw::first_peak(full, bw::TraceColumn::Total);
                    rep.check(tag + ".asym_peak_dev",
                              peak ? std::abs(peak->p - 1.0) : 1.0, 0.02);
                } else {
                    const auto px = bw::first_peak(full, bw::TraceColumn::X);
                    const auto py = bw::first_peak(full, bw::TraceColumn::Y);
                    const double dx = px ? std::abs(px->p - pred.p_x_max) : 1.0;
                    const double dy = py ? std::abs(py->p - pred.p_y_max) : 1.0;
                    rep.check(tag + ".asym_peak_dev", std::max(dx, dy), 0.02);
                }
            }
        }
    }
}

void validate_random_configs(Report& rep, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int i = 0; i < 16; ++i) {
        const bool bothsets = i >= 8;
        const int n1 = draw(10, 60), n2 = draw(10, 60);
        const int k1 = draw(1, n1 - 1);
        const int k2 = bothsets ? draw(1, n2 - 1) : 0;
        const bw::Init init = i % 2 ? bw::Init::Edges : bw::Init::Vertices;
        char tag[64];
        std::snprintf(tag, sizeof tag, "random.%d_%d_%d_%d%s", n1, n2, k1, k2,
                      init == bw::Init::Vertices ? ".vertices" : ".edges");

        const bw::GraphSpec g(n1, n2);
        const bw::MarkConfig m = bw::mark(g, k1, k2);
        const bw::ProbabilityTrace full =
            bw::evolve(bw::initial_state(g, init), m, 100);
        const bw::ProbabilityTrace red = bw::reduced_trace(g, k1, k2, init, 100);
        rep.check(std::string(tag) + ".full_vs_reduced",
                  max_trace_dev(full, red), 1e-9);

        if (k2 == 0) {
            double dev = 0.0;
            for (const bw::TraceRow& r : full.rows) {
                const bw::OneSetProb p =
                    bw::closed_form_prob_oneset(n1, n2, k1, init, r.t);
                dev = std::max(dev, std::abs(r.p_total - p.p_total));
            }
            rep.check(std::string(tag) + ".full_vs_closed_form", dev, 1e-9);
        }

        const bw::SubspaceBasis basis = k2 == 0 ? bw::basis_oneset(m)
                                                : bw::basis_bothsets(m);
        const bw::Matrix closed =
            k2 == 0 ? bw::reduced_operator_oneset(n1, k1)
                    : bw::reduced_operator_bothsets(n1, n2, k1, k2);
        rep.check(std::string(tag) + ".op_conjugation_dev",
                  closed.max_abs_diff(bw::reduced_operator_conjugated(basis)),
                  1e-12);
        rep.check(std::string(tag) + ".op_unitarity", bw::unitarity_defect(closed),
                  1e-12);
    }
}

void validate_eigen(Report& rep) {
    for (const auto& [n1, k1] : std::vector<std::pair<int, int>>{
             {400, 3}, {50, 4}, {10, 2}}) {
        const bw::Matrix u = bw::reduced_operator_oneset(n1, k1);
        const auto sys = bw::exact_eigensystem_oneset(n1, k1);
        double worst = 0.0;
        for (const bw::EigenPair& p : sys) {
            std::vector<bw::cx> r = u * p.vector;
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= p.value * p.vector[i];
            worst = std::max(worst, bw::vec_norm(r));
        }
        const std::string tag =
            "eigen.oneset_" + std::to_string(n1) + "_" + std::to_string(k1);
        rep.check(tag + ".residual", worst, 1e-12);

        const bw::EigenSystem num = bw::eigensystem_normal(u);
        double vdev = 0.0;
        for (const bw::cx& lam : num.values) {
            double best = 1e9;
            for (const bw::EigenPair& p : sys)
                best = std::min(best, std::abs(lam - p.value));
            vdev = std::max(vdev, best);
        }
        rep.check(tag + ".numeric_eigenvalue_dev", vdev, 1e-10);
    }

    for (const auto& cfg : std::vector<std::array<int, 4>>{
             {1000, 3000, 1, 2}, {500, 400, 2, 3}}) {
        const auto [n1, n2, k1, k2] = cfg;
        const auto pert = bw::perturbative_eigensystem_bothsets(n1, n2, k1, k2);
        const auto closed = bw::asymptotic_eigensystem_bothsets(n1, n2, k1, k2);
        double lam_dev = 0.0, vec_dev = 0.0;
        for (std::size_t j = 0; j < pert.size(); ++j) {
            lam_dev = std::max(lam_dev, std::abs(pert[j].value - closed[j].value));
            std::vector<bw::cx> a = pert[j].vector, b = closed[j].vector;
            bw::canonicalize_phase(a);
            bw::canonicalize_phase(b);
            vec_dev = std::max(vec_dev, bw::vec_max_abs_diff(a, b));
        }
        char tag[64];
        std::snprintf(tag, sizeof tag, "eigen.pert_%d_%d_%d_%d", n1, n2, k1, k2);
        rep.check(std::string(tag) + ".eigenvalue_dev", lam_dev, 1e-10);
        rep.check(std::string(tag) + ".eigenvector_dev", vec_dev, 1e-10);
    }
}

void validate_determinism(Report& rep) {
    const bw::GraphSpec g(13, 7);
    const bw::MarkConfig m = bw::mark(g, 2, 3);
    const auto tr1 = bw::evolve(bw::initial_state_vertices(g), m, 30);
    const auto tr2 = bw::evolve(bw::initial_state_vertices(g), m, 30);
    rep.check_flag("determinism.trace_bytes",
                   trace_to_csv(tr1) == trace_to_csv(tr2));
}

int run_validate(std::uint64_t seed, const std::string& out) {
    Report rep;
    rep.body << "seed=" << seed << "\n";
    validate_figure_configs(rep);
    validate_random_configs(rep, seed);
    validate_eigen(rep);
    validate_determinism(rep);
    rep.body << "checks=" << rep.checks << "\n";
    rep.body << "failures=" << rep.failures << "\n";
    rep.body << "overall=" << (rep.failures == 0 ? "pass" : "fail") << "\n";
    write_output(out, rep.body.str());
    return rep.failures == 0 ? 0 : 1;
}

// ------------------------------------------------------------------- table

int run_table(int scale, const std::string& init_opt, std::int64_t steps,
              const std::string& out) {
    if (scale < 300 || scale % 2 != 0)
        throw std::invalid_argument(
            "table: scale must be even and >= 300 (>= 100x the largest mark count)");
    std::vector<bw::Init> inits;
    if (init_opt == "vertices" || init_opt == "both")
        inits.push_back(bw::Init::Vertices);
    if (init_opt == "edges" || init_opt == "both")
        inits.push_back(bw::Init::Edges);

    std::ostringstream ss;
    ss << "row,case,n1,n2,k1,k2,init,quantity,predicted,measured,deviation\n";
    for (int row = 0; row < 8; ++row) {
        const auto c = static_cast<bw::TableCase>(row);
        const bw::TableConfig cfg = bw::instantiate_case(c, scale);
        for (const bw::Init init : inits) {
            const bw::TableRow summary = bw::table_summary(
                bw::GraphSpec(cfg.n1, cfg.n2), cfg.k1, cfg.k2, init, steps);
            for (const bw::TableEntry& e : summary.entries) {
                ss << summary.row << "," << bw::table_case_name(summary.kind)
                   << "," << cfg.n1 << "," << cfg.n2 << "," << cfg.k1 << ","
                   << cfg.k2 << ","
                   << (init == bw::Init::Vertices ? "vertices" : "edges") << ","
                   << e.quantity << "," << bw::format_probability(e.predicted)
                   << "," << bw::format_probability(e.measured) << ","
                   << bw::format_probability(e.deviation) << "\n";
            }
        }
    }
    write_output(out, ss.str());
    return 0;
}

// ----------------------------------------------------------------- figures

int run_figures(const std::string& outdir, std::int64_t steps_override) {
    std::filesystem::create_directories(outdir);
    struct Panel {
        std::string name;
        int n1, n2, k1, k2;
        bw::Init init;
        std::int64_t steps;
    };
    std::vector<Panel> panels;
    for (const FigureConfig& f : reference_grid()) {
        panels.push_back({f.name + "_vertices", f.n1, f.n2, f.k1, f.k2,
                          bw::Init::Vertices, f.steps});
        panels.push_back({f.name + "_edges", f.n1, f.n2, f.k1, f.k2,
                          bw::Init::Edges, f.steps});
    }
    for (const Panel& p : panels) {
        const bw::GraphSpec g(p.n1, p.n2);
        const bw::MarkConfig m = bw::mark(g, p.k1, p.k2);
        const std::int64_t steps = steps_override > 0 ? steps_override : p.steps;
        const bw::ProbabilityTrace tr =
            bw::evolve(bw::initial_state(g, p.init), m, steps);
        std::ofstream os(std::filesystem::path(outdir) / (p.name + ".csv"),
                         std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot open output file in " + outdir);
        bw::write_trace_csv(os, tr);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coined quantum walk search on complete bipartite graphs"};
    app.require_subcommand(1);
    // INI sections are named after the subcommands ([run], [table], ...);
    // the flag may come before or after the subcommand, flags win over file.
    app.set_config("--config", "", "read options from an INI file");

    const auto accepts_config = [](CLI::App* sub) {
        sub->fallthrough(true);
        sub->configurable(true);
    };

    RunOptions opt;
    CLI::App* run = app.add_subcommand("run", "simulate one configuration");
    accepts_config(run);
    run->add_option("--n1", opt.n1, "size of partite set X")->required();
    run->add_option("--n2", opt.n2, "size of partite set Y")->required();
    run->add_option("--k1", opt.k1, "marked vertices in X");
    run->add_option("--k2", opt.k2, "marked vertices in Y");
    run->add_option("--init", opt.init, "initial state")
        ->check(CLI::IsMember({"vertices", "edges"}));
    run->add_option("--engine", opt.engine, "evolution engine")
        ->check(CLI::IsMember({"full", "reduced", "analytic"}));
    run->add_option("--steps", opt.steps, "number of steps")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--out", opt.out, "output CSV path, - for stdout");
    run->add_option("--seed", opt.seed, "seed (accepted for uniformity)");

    std::uint64_t vseed = 12345;
    std::string vout = "-";
    CLI::App* validate = app.add_subcommand("validate", "run the self-check suites");
    accepts_config(validate);
    validate->add_option("--seed", vseed, "seed for the random grid");
    validate->add_option("--out", vout, "report path, - for stdout");

    int tscale = 400;
    std::string tinit = "both";
    std::int64_t tsteps = 0;
    std::string tout = "-";
    CLI::App* table = app.add_subcommand("table", "predicted vs measured summary");
    accepts_config(table);
    table->add_option("--scale", tscale, "representative set size");
    table->add_option("--init", tinit, "initial state or both")
        ->check(CLI::IsMember({"vertices", "edges", "both"}));
    table->add_option("--steps", tsteps, "simulation horizon, 0 = auto")
        ->check(CLI::NonNegativeNumber);
    table->add_option("--out", tout, "output CSV path, - for stdout");

    std::string fdir;
    std::int64_t fsteps = 0;
    CLI::App* figures = app.add_subcommand("figures", "emit the canonical panels");
    accepts_config(figures);
    figures->add_option("--outdir", fdir, "directory for the CSV files")->required();
    figures->add_option("--steps", fsteps, "override per-panel step counts")
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const bw::ProbabilityTrace tr = run_trace(opt);
            write_output(opt.out, trace_to_csv(tr));
            return 0;
        }
        if (validate->parsed()) return run_validate(vseed, vout);
        if (table->parsed()) return run_table(tscale, tinit, tsteps, tout);
        if (figures->parsed()) return run_figures(fdir, fsteps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
