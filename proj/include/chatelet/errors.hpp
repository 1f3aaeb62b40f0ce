#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chatelet {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input to an operation that requires a nonzero value was zero.
struct ZeroInput : Error {
    explicit ZeroInput(const std::string& what) : Error(what) {}
};

// A documented precondition of an algorithm does not hold for the given input.
struct CriterionFails : Error {
    explicit CriterionFails(const std::string& what) : Error(what) {}
};

// A p-adic computation ran out of working precision.
struct PrecisionLoss : Error {
    explicit PrecisionLoss(const std::string& what) : Error(what) {}
};

// Asked for the ramified-quadratic-extension invariant of a split or
// unramified algebra.
struct RamifiedOrSplit : Error {
    explicit RamifiedOrSplit(const std::string& what) : Error(what) {}
};

// Asked for data that only exists for a ramified quadratic extension.
struct NotRamified : Error {
    explicit NotRamified(const std::string& what) : Error(what) {}
};

// Asked for data that only exists for a split algebra.
struct NotSplit : Error {
    explicit NotSplit(const std::string& what) : Error(what) {}
};

struct NotSeparable : Error {
    explicit NotSeparable(const std::string& what) : Error(what) {}
};

struct NotIrreducible : Error {
    explicit NotIrreducible(const std::string& what) : Error(what) {}
};

struct Reducible : Error {
    explicit Reducible(const std::string& what) : Error(what) {}
};

struct WrongShape : Error {
    explicit WrongShape(const std::string& what) : Error(what) {}
};

struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& what) : Error(what) {}
};

// The twisting constant of a surface was a rational square.
struct SquareA : Error {
    explicit SquareA(const std::string& what) : Error(what) {}
};

struct BadDegree : Error {
    explicit BadDegree(const std::string& what) : Error(what) {}
};

struct NotOnCurve : Error {
    explicit NotOnCurve(const std::string& what) : Error(what) {}
};

struct TwoTorsion : Error {
    explicit TwoTorsion(const std::string& what) : Error(what) {}
};

struct EmptyRealLocus : Error {
    explicit EmptyRealLocus(const std::string& what) : Error(what) {}
};

struct AllRepresentativesVanish : Error {
    explicit AllRepresentativesVanish(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace chatelet
