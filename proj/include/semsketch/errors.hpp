#pragma once

#include <stdexcept>
#include <string>

namespace semsketch {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File cannot be opened / written.
struct IoError : Error {
    using Error::Error;
};

// Malformed input data; message carries file/line or record id.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input violating a domain invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Not enough sketches or contexts to satisfy a split spec.
struct InsufficientError : Error {
    using Error::Error;
};

// External plugin transport or protocol failure.
struct PluginError : Error {
    using Error::Error;
};

// Operation requires a capability the attached model does not provide.
struct CapabilityError : Error {
    using Error::Error;
};

// Fill model produced no usable output where some was required.
struct FillError : Error {
    using Error::Error;
};

}  // namespace semsketch
