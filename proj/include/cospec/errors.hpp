#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPartition : Error {
    using Error::Error;
};

struct NotConnected : Error {
    NotConnected() : Error("graph is not connected") {}
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct MalformedGraph6 : Error {
    using Error::Error;
};

struct FUndefinedAtDistance : Error {
    explicit FUndefinedAtDistance(int d)
        : Error("distance function undefined at d=" + std::to_string(d)), distance(d) {}
    int distance;
};

// Raised by enumerate_connected when n is past the labeled-enumeration range.
struct UseExternalFile : Error {
    using Error::Error;
};

}  // namespace cospec
