#pragma once

#include <stdexcept>
#include <string>

namespace dashgrid {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition
/// (out-of-range threshold, region outside the image, bad config field).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input (PGM, CSV, JSON).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// The pipeline cannot produce a result from otherwise valid input,
/// e.g. the scan found no hits or the column spacing is undefined.
class ProcessingError : public Error {
public:
    using Error::Error;
};

}  // namespace dashgrid
