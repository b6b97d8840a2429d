#pragma once

#include <complex>

namespace bipwalk {

using cx = std::complex<double>;

// Initial superposition: Vertices weights each vertex equally, Edges
// weights each directed arc equally.
enum class Init { Vertices, Edges };

} // namespace bipwalk
