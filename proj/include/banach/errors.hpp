#pragma once

#include <stdexcept>
#include <string>

namespace banach {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be mapped to one of the supported algebras.
struct UnsupportedAlgebra : Error {
    using Error::Error;
};

// A certified enclosure could not be tightened to tolerance within budget.
struct CertificationFailed : Error {
    std::size_t budget;
    explicit CertificationFailed(std::size_t spent, const std::string& what)
        : Error(what), budget(spent) {}
};

struct NotAZeroDivisor : Error {
    using Error::Error;
};

struct NotAZero : Error {
    using Error::Error;
};

struct NotRegular : Error {
    using Error::Error;
};

struct NotATDZ : Error {
    using Error::Error;
};

struct NotUnimodular : Error {
    using Error::Error;
};

struct OutsideDomain : Error {
    using Error::Error;
};

// Malformed element spec or config (bad JSON shape, a >= b, |gamma| != 1, ...).
struct ParseError : Error {
    using Error::Error;
};

// Result of the operation falls outside the representable class
// (e.g. the pointwise sum of a Blaschke-carrying element and a polynomial).
struct Unrepresentable : Error {
    using Error::Error;
};

}  // namespace banach
