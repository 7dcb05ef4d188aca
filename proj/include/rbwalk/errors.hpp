#pragma once
#include <stdexcept>

namespace rbwalk {

// bad inputs / violated preconditions; the CLI maps these to exit code 1
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// everything below maps to exit code 2

struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// disconnected graph etc. (cover time undefined)
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// solver non-convergence, infeasible fixed point, broken bracket
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rbwalk
