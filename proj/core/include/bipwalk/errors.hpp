#pragma once

#include <stdexcept>
#include <string>

namespace bipwalk {

// A vertex class required by a reduced basis is empty, so the basis vector
// would be zero. The message names the offending class and the usable engine.
class DegenerateBasisError : public std::invalid_argument {
public:
    explicit DegenerateBasisError(const std::string& what)
        : std::invalid_argument(what) {}
};

// A state was asked to be expressed in a reduced basis it does not lie in.
class ProjectionLossError : public std::runtime_error {
public:
    ProjectionLossError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace bipwalk
