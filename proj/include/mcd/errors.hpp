#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcd {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A hub gadget violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A family parameter (r, t, n) is outside its domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The requested vertex count is below the family threshold n_t.
class ThresholdError : public ParameterError {
public:
    ThresholdError(std::int64_t n, std::int64_t n_t)
        : ParameterError("n = " + std::to_string(n) + " is below the threshold n_t = " +
                         std::to_string(n_t)),
          n_(n), n_t_(n_t) {}

    std::int64_t n() const noexcept { return n_; }
    std::int64_t n_t() const noexcept { return n_t_; }

private:
    std::int64_t n_;
    std::int64_t n_t_;
};

/// A gadget index lies outside its family's range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// The requested n cannot hold the core of the construction.
class CapacityError : public Error {
public:
    CapacityError(std::int64_t n, std::int64_t core_vertices)
        : Error("n = " + std::to_string(n) + " is smaller than the core vertex count " +
                std::to_string(core_vertices)),
          core_vertices_(core_vertices) {}

    std::int64_t core_vertices() const noexcept { return core_vertices_; }

private:
    std::int64_t core_vertices_;
};

/// Cycle enumeration produced more cycles than the caller allowed.
class CapExceededError : public Error {
public:
    explicit CapExceededError(std::int64_t cap)
        : Error("cycle enumeration exceeded the cap of " + std::to_string(cap) + " cycles"),
          cap_(cap) {}

    std::int64_t cap() const noexcept { return cap_; }

private:
    std::int64_t cap_;
};

/// Malformed graph input or a failed write.
class IoError : public Error {
public:
    using Error::Error;
};

/// An internal arithmetic invariant failed (non-integral division, overflow).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace mcd
