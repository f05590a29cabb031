#pragma once

#include <stdexcept>
#include <string>

namespace knotmat {

// Base for every library error; the CLI maps subtypes to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (pairing count, memo size, crossing count, rung count)
// would be exceeded. Raised before work starts, never after a partial result.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Root finder failed to meet the residual target at maximum precision.
class NoConvergence : public Error {
public:
    using Error::Error;
};

class InvalidCoupling : public Error {
public:
    using Error::Error;
};

class EvenParameter : public Error {
public:
    using Error::Error;
};

class NonSymmetrizable : public Error {
public:
    using Error::Error;
};

class OffCircle : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class MultiComponent : public Error {
public:
    using Error::Error;
};

class NegativeFloor : public Error {
public:
    using Error::Error;
};

class ConservationViolated : public Error {
public:
    using Error::Error;
};

class MalformedDiagram : public Error {
public:
    using Error::Error;
};

class NotPalindromic : public Error {
public:
    using Error::Error;
};

class UnknownKnot : public Error {
public:
    using Error::Error;
};

class UnknownTarget : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

} // namespace knotmat
