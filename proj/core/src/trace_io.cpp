#include "bipwalk/trace_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bipwalk {

std::string format_probability(double p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    return buf;
}

void write_trace_csv(std::ostream& os, const ProbabilityTrace& tr) {
    os << "t,p_x,p_y,p_total\n";
    char line[160];
    for (const TraceRow& r : tr.rows) {
        std::snprintf(line, sizeof line, "%" PRId64 ",%.12g,%.12g,%.12g\n",
                      r.t, r.p_x, r.p_y, r.p_total);
        os << line;
    }
}

ProbabilityTrace read_trace_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "t,p_x,p_y,p_total")
        throw std::runtime_error("read_trace_csv: bad header");
    ProbabilityTrace tr;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        TraceRow r;
        if (std::sscanf(line.c_str(), "%" SCNd64 ",%lg,%lg,%lg",
                        &r.t, &r.p_x, &r.p_y, &r.p_total) != 4)
            throw std::runtime_error("read_trace_csv: bad row: " + line);
        tr.rows.push_back(r);
    }
    return tr;
}

} // namespace bipwalk
