#pragma once

#include <stdexcept>
#include <string>

namespace optop {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSubset : public Error {
public:
    using Error::Error;
};

class BoundsExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed space/instance/verdict files.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace optop
