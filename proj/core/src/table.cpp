#include "bipwalk/table.hpp"

#include "bipwalk/errors.hpp"
#include "bipwalk/perturbative.hpp"
#include "bipwalk/spectral.hpp"
#include "bipwalk/subspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bipwalk {

int table_row_number(TableCase c) {
    return static_cast<int>(c) + 1;
}

std::string table_case_name(TableCase c) {
    switch (c) {
    case TableCase::OneSetEqualSizes: return "one_set_equal_sizes";
    case TableCase::OneSetFirstLarger: return "one_set_marked_side_larger";
    case TableCase::OneSetFirstSmaller: return "one_set_marked_side_smaller";
    case TableCase::BothSetsResonant: return "both_sets_resonant";
    case TableCase::BothSetsEqualMarks: return "both_sets_equal_marks";
    case TableCase::BothSetsEqualSizes: return "both_sets_equal_sizes";
    case TableCase::BothSetsFirstSmaller: return "both_sets_first_smaller";
    case TableCase::BothSetsFirstLarger: return "both_sets_first_larger";
    }
    throw std::invalid_argument("table_case_name: bad case");
}

TableCase classify_case(const GraphSpec& g, int k1, int k2) {
    if (k1 < 0 || k2 < 0 || (k1 == 0 && k2 == 0))
        throw std::invalid_argument("classify_case: need at least one marked vertex");
    if ((k1 > 0 && k1 > g.n1 - 1) || (k2 > 0 && k2 > g.n2 - 1))
        throw DegenerateBasisError(
            "classify_case: a fully marked set leaves no unmarked vertex class; "
            "only the full-space engine applies");
    // Only Y marked: exchange the set roles, then it is a one-set row.
    const bool exchanged = k1 == 0;
    const int n1 = exchanged ? g.n2 : g.n1;
    const int n2 = exchanged ? g.n1 : g.n2;
    if (k2 == 0 || exchanged) {
        if (n1 == n2) return TableCase::OneSetEqualSizes;
        return n1 > n2 ? TableCase::OneSetFirstLarger
                       : TableCase::OneSetFirstSmaller;
    }
    if (static_cast<std::int64_t>(k1) * g.n2 == static_cast<std::int64_t>(k2) * g.n1)
        return TableCase::BothSetsResonant;
    if (k1 == k2) return TableCase::BothSetsEqualMarks;
    if (g.n1 == g.n2) return TableCase::BothSetsEqualSizes;
    return g.n1 < g.n2 ? TableCase::BothSetsFirstSmaller
                       : TableCase::BothSetsFirstLarger;
}

namespace {

std::int64_t auto_horizon(double longest_t, std::int64_t requested) {
    if (requested > 0) return requested;
    const std::int64_t h = static_cast<std::int64_t>(std::ceil(2.5 * longest_t)) + 4;
    return std::max<std::int64_t>(h, 20);
}

TableEntry entry(const std::string& quantity, double predicted, double measured) {
    return {quantity, predicted, measured, measured - predicted};
}

double peak_p(const std::optional<TracePeak>& p) {
    return p ? p->p : std::numeric_limits<double>::quiet_NaN();
}
double peak_t(const std::optional<TracePeak>& p) {
    return p ? static_cast<double>(p->t) : std::numeric_limits<double>::quiet_NaN();
}

} // namespace

TableRow table_summary(const GraphSpec& g, int k1, int k2, Init init,
                       std::int64_t steps) {
    const TableCase c = classify_case(g, k1, k2);
    TableRow row{c, table_row_number(c), g, k1, k2, init, {}};

    if (row.row <= 3) {
        // One-set rows, possibly with the set roles exchanged. Success
        // probability alternates between an even and an odd envelope.
        const bool exchanged = k1 == 0;
        const int m1 = exchanged ? g.n2 : g.n1;
        const int m2 = exchanged ? g.n1 : g.n2;
        const int k = exchanged ? k2 : k1;
        const OneSetPrediction pred = runtime_oneset(m1, m2, k, init);
        const std::int64_t horizon =
            auto_horizon(std::max(pred.t_star + 1.0, pred.t_asymptotic), steps);
        const ProbabilityTrace tr =
            reduced_trace(GraphSpec(m1, m2), k, 0, init, horizon);
        const auto even = first_parity_peak(tr, TraceColumn::Total, 0);
        const auto odd = first_parity_peak(tr, TraceColumn::Total, 1);
        row.entries.push_back(entry("t_even", static_cast<double>(pred.t_even),
                                    peak_t(even)));
        row.entries.push_back(entry("p_even", pred.p_even_max, peak_p(even)));
        row.entries.push_back(entry("t_odd", static_cast<double>(pred.t_odd),
                                    peak_t(odd)));
        row.entries.push_back(entry("p_odd", pred.p_odd_max, peak_p(odd)));
        return row;
    }

    const BothSetsPrediction pred = runtimes_bothsets(g.n1, g.n2, k1, k2, init);
    const std::int64_t horizon =
        auto_horizon(std::max(pred.t_x, pred.t_y), steps);
    const ProbabilityTrace tr = reduced_trace(g, k1, k2, init, horizon);
    if (row.row == 4) {
        // On resonance the two sets crest together and the total approaches 1.
        const auto peak = first_peak(tr, TraceColumn::Total);
        row.entries.push_back(entry("t_total", pred.t_x, peak_t(peak)));
        row.entries.push_back(entry("p_total", 1.0, peak_p(peak)));
        return row;
    }
    const auto px = first_peak(tr, TraceColumn::X);
    const auto py = first_peak(tr, TraceColumn::Y);
    row.entries.push_back(entry("t_x", pred.t_x, peak_t(px)));
    row.entries.push_back(entry("p_x", pred.p_x_max, peak_p(px)));
    row.entries.push_back(entry("t_y", pred.t_y, peak_t(py)));
    row.entries.push_back(entry("p_y", pred.p_y_max, peak_p(py)));
    return row;
}

TableConfig instantiate_case(TableCase c, int scale) {
    if (scale < 8 || scale % 2 != 0)
        throw std::invalid_argument("instantiate_case: scale must be even and >= 8");
    const int s = scale;
    switch (c) {
    case TableCase::OneSetEqualSizes: return {s, s, 3, 0};
    case TableCase::OneSetFirstLarger: return {s, 1, 3, 0};
    case TableCase::OneSetFirstSmaller: return {s, 2 * s, 3, 0};
    case TableCase::BothSetsResonant: return {3 * s / 2, s, 3, 2};
    case TableCase::BothSetsEqualMarks: return {s, 2 * s, 2, 2};
    case TableCase::BothSetsEqualSizes: return {s, s, 2, 3};
    case TableCase::BothSetsFirstSmaller: return {s, 2 * s, 2, 3};
    case TableCase::BothSetsFirstLarger: return {2 * s, s, 2, 3};
    }
    throw std::invalid_argument("instantiate_case: bad case");
}

} // namespace bipwalk
