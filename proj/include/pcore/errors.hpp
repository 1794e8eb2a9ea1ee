#pragma once

#include <stdexcept>
#include <string>

namespace pcore {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic only: any operation that would wrap reports instead.
struct OverflowError final : Error {
    using Error::Error;
};

// Malformed input or unsatisfied operation precondition.
struct PreconditionError : Error {
    using Error::Error;
};

struct NotPCoreError final : Error {
    using Error::Error;
};

struct NotPPrimeError final : Error {
    using Error::Error;
};

struct NotPrimeError final : Error {
    using Error::Error;
};

struct NotOddError final : Error {
    using Error::Error;
};

// The abacus residue sequence hit 0, so there is no corresponding walk.
struct RevisitsZeroError final : Error {
    using Error::Error;
};

// Exhaustive search refused: p is beyond the desk-scale gate.
struct FeasibilityError final : Error {
    using Error::Error;
};

}  // namespace pcore
