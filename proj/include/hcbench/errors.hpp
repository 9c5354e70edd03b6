#ifndef HCBENCH_ERRORS_HPP
#define HCBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcbench {

// Malformed input: files, configs, flags. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition between library components was violated (leaf-set mismatch,
// infeasible assignment, ...). CLI maps this to exit code 3.
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a configured resource cap. CLI maps this to exit code 4.
struct resource_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hcbench

#endif
