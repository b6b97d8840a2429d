#pragma once

#include "bipwalk/defs.hpp"
#include "bipwalk/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bipwalk {

// The eight qualitative parameter regimes. Rows 1 to 3 have one marked set
// (after exchanging set roles if only Y is marked); 4 to 8 have both.
// Resonance k1/n1 = k2/n2 makes both sets peak together; otherwise the
// classifier keys on k1 = k2, then the size relation.
enum class TableCase {
    OneSetEqualSizes,     // row 1: n1 = n2
    OneSetFirstLarger,    // row 2: n1 > n2
    OneSetFirstSmaller,   // row 3: n1 < n2
    BothSetsResonant,     // row 4: k1 n2 = k2 n1
    BothSetsEqualMarks,   // row 5: k1 = k2, off resonance
    BothSetsEqualSizes,   // row 6: n1 = n2
    BothSetsFirstSmaller, // row 7: n1 < n2
    BothSetsFirstLarger,  // row 8: n1 > n2
};

int table_row_number(TableCase c);
std::string table_case_name(TableCase c);

TableCase classify_case(const GraphSpec& g, int k1, int k2);

// One predicted-vs-measured quantity. Times are in steps, probabilities
// dimensionless; deviation = measured - predicted.
struct TableEntry {
    std::string quantity;
    double predicted = 0.0;
    double measured = 0.0;
    double deviation = 0.0;
};

struct TableRow {
    TableCase kind;
    int row = 0;
    GraphSpec graph;
    int k1 = 0, k2 = 0;
    Init init = Init::Vertices;
    std::vector<TableEntry> entries;
};

// Classifies the configuration, computes the analytic runtime and peak
// predictions, simulates, and extracts the measured first peaks. steps = 0
// picks a horizon of about 2.5 predicted runtimes.
TableRow table_summary(const GraphSpec& g, int k1, int k2, Init init,
                       std::int64_t steps = 0);

// Representative configuration for a row at a given scale (scale must be
// even, at least 8). Row 1 is K(scale, scale) with 3 marks, the others keep
// the same order of magnitude.
struct TableConfig {
    int n1 = 0, n2 = 0, k1 = 0, k2 = 0;
};
TableConfig instantiate_case(TableCase c, int scale);

} // namespace bipwalk
