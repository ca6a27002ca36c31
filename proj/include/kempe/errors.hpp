#ifndef KEMPE_ERRORS_HPP
#define KEMPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kempe {

// Caller handed us something that violates a documented precondition.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured size/state cap was exceeded. Carries how far we got.
struct capacity_error : std::runtime_error {
    long long partial_count;
    capacity_error(const std::string& what, long long partial)
        : std::runtime_error(what), partial_count(partial) {}
};

// A self-check that must hold by construction failed; always a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace kempe

#endif
