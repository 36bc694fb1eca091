#ifndef LENSTC_ERRORS_HPP
#define LENSTC_ERRORS_HPP

#include <stdexcept>

namespace lenstc {

/// Invalid argument values (out-of-range parameters, mismatched rings, ...).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation was refused because its predicted size exceeds the
/// configured monomial limit or the packed-key width.
struct sizing_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lenstc

#endif
