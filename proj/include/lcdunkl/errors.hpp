#pragma once

#include <stdexcept>
#include <string>

namespace lcd {

// Precondition violated by an argument (bad k, det != 1, s too small, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operands live on different grids or carry different matrices.
struct MismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Grid too coarse for the chirp oscillation of the kernel.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oracle path asked to run on a grid that is too large.
struct CostError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lcd
