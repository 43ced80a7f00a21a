#pragma once

#include <stdexcept>
#include <string>

namespace weilzeta {

/* Bad user input or a violated precondition (CLI exit code 1). */
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* A brute-force computation would exceed the configured size bound. */
struct size_bound_error : input_error {
    using input_error::input_error;
};

/* The requested computation exists mathematically but is not implemented. */
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Two routes that must agree did not; signals a bug rather than bad input. */
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace weilzeta
