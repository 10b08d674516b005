#pragma once

#include <stdexcept>
#include <string>

namespace qdiv
{

struct NonInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutOfTruncation : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Pole of 1/(1 - q^0).
struct ZeroExponent : std::domain_error {
    using std::domain_error::domain_error;
};

// Infinite product whose factors never become 1 inside the box.
struct NonTruncating : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegenerateAlphabet : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The tail of an infinite sum could not be certified to vanish at the
// requested caps.
struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qdiv
