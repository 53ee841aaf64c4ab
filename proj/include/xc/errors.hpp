#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xc {

/// Invalid argument to an operation (out-of-range parameter, wrong grading, ...).
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two values bound to different threefold models were combined.
struct model_mismatch_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Expression or ledger text failed to parse. `offset` is a 1-based byte
/// position into the input.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset(offset) {}
    std::size_t offset = 0;
};

/// An internal cross-check failed (non-integral Euler characteristic,
/// presentation inconsistency, ...). Signals bad inputs or a defect.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace xc
