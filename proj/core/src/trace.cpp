#include "bipwalk/trace.hpp"

#include <stdexcept>

namespace bipwalk {

double trace_value(const TraceRow& r, TraceColumn c) {
    switch (c) {
    case TraceColumn::X: return r.p_x;
    case TraceColumn::Y: return r.p_y;
    case TraceColumn::Total: return r.p_total;
    }
    throw std::invalid_argument("trace_value: bad column");
}

TracePeak trace_max(const ProbabilityTrace& tr, TraceColumn c) {
    if (tr.rows.empty())
        throw std::invalid_argument("trace_max: empty trace");
    TracePeak best{tr.rows[0].t, trace_value(tr.rows[0], c)};
    for (const TraceRow& r : tr.rows) {
        const double v = trace_value(r, c);
        if (v > best.p) best = {r.t, v};
    }
    return best;
}

std::optional<TracePeak> first_parity_peak(const ProbabilityTrace& tr,
                                           TraceColumn c, int parity) {
    parity &= 1;
    const std::int64_t n = static_cast<std::int64_t>(tr.rows.size());
    for (std::int64_t t = 1; t < n; ++t) {
        if ((tr.rows[t].t & 1) != parity) continue;
        if (t + 2 >= n) break;
        const double here = trace_value(tr.rows[t], c);
        const double right = trace_value(tr.rows[t + 2], c);
        const bool left_ok = t - 2 < 0
            || trace_value(tr.rows[t - 2], c) <= here;
        if (left_ok && here >= right)
            return TracePeak{tr.rows[t].t, here};
    }
    return std::nullopt;
}

std::optional<TracePeak> first_peak(const ProbabilityTrace& tr, TraceColumn c) {
    const auto even = first_parity_peak(tr, c, 0);
    const auto odd = first_parity_peak(tr, c, 1);
    if (!even) return odd;
    if (!odd) return even;
    return even->p >= odd->p ? even : odd;
}

} // namespace bipwalk
