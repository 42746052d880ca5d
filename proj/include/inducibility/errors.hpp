#pragma once

#include <stdexcept>
#include <string>

namespace ind {

// Invalid mathematical input (bad profile, out-of-range index, malformed file).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input exceeds a hard size cap (vertex counts, part counts, scan bounds).
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

}  // namespace ind
