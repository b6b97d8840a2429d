#pragma once

#include "bipwalk/trace.hpp"

#include <iosfwd>
#include <string>

namespace bipwalk {

// CSV layout: header "t,p_x,p_y,p_total", one row per step, LF endings,
// 12 significant digits. Byte stable for equal inputs.
void write_trace_csv(std::ostream& os, const ProbabilityTrace& tr);
ProbabilityTrace read_trace_csv(std::istream& is);

std::string format_probability(double p); // %.12g

} // namespace bipwalk
