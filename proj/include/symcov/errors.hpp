#pragma once

#include <stdexcept>
#include <string>

namespace symcov {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct DimMismatch : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct InvalidSample : Error {
    using Error::Error;
};

struct InvalidShape : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace symcov
