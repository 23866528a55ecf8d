#pragma once

#include <stdexcept>
#include <string>

namespace symq {

/// Base for every error thrown by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A table has the wrong shape or an entry out of range.
class MalformedTable : public Error {
public:
    using Error::Error;
};

/// An involution table that is not a permutation of the underlying set.
class InvalidInvolution : public Error {
public:
    using Error::Error;
};

/// Bad user-level argument (unknown spec string, non-positive budget, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle refused to run because the search space exceeds its cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace symq
