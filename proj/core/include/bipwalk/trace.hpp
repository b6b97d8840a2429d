#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bipwalk {

struct TraceRow {
    std::int64_t t = 0;
    double p_x = 0.0;
    double p_y = 0.0;
    double p_total = 0.0;
};

struct ProbabilityTrace {
    std::vector<TraceRow> rows;

    std::size_t size() const noexcept { return rows.size(); }
    const TraceRow& operator[](std::size_t i) const { return rows[i]; }
};

enum class TraceColumn { X, Y, Total };

double trace_value(const TraceRow& r, TraceColumn c);

// Largest value of a column and the first step attaining it.
struct TracePeak {
    std::int64_t t = 0;
    double p = 0.0;
};
TracePeak trace_max(const ProbabilityTrace& tr, TraceColumn c);

// First local maximum within one parity class: smallest t >= 1 of the given
// parity with p(t-2) <= p(t) >= p(t+2), a missing left neighbour counting as
// satisfied. The two-step neighbourhood matches the even/odd interleaving of
// these walks. Empty when the column never turns over.
std::optional<TracePeak> first_parity_peak(const ProbabilityTrace& tr,
                                           TraceColumn c, int parity);

// Better of the two parity classes' first peaks.
std::optional<TracePeak> first_peak(const ProbabilityTrace& tr, TraceColumn c);

} // namespace bipwalk
