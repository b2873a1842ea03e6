#pragma once

#include <stdexcept>
#include <string>

namespace hopfg {

// Base class for every failure the library raises on purpose. Mathematical
// check failures are reported through CheckReport instead; exceptions mean
// the input violated a precondition or an internal invariant broke.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ModulusMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};

// Graded-family errors.
struct WindowIncomplete : Error {
    using Error::Error;
};
struct GradeMismatch : Error {
    using Error::Error;
};
struct PivotNotInvertible : Error {
    using Error::Error;
};

// Integral machinery.
struct IntegralSpaceDimension : Error {
    using Error::Error;
};
struct InconsistentNormalization : Error {
    using Error::Error;
};
struct NotUnimodular : Error {
    using Error::Error;
};
struct NoNonvanishingWitness : Error {
    using Error::Error;
};
struct RelationFails : Error {
    using Error::Error;
};

// Modified-trace machinery.
struct NotEndomorphismOfP : Error {
    using Error::Error;
};
struct NotIntertwiner : Error {
    using Error::Error;
};

// Quantum sl2 instance.
struct AlphaIntegralSingular : Error {
    using Error::Error;
};
struct DegenerateEigenvalues : Error {
    using Error::Error;
};

}  // namespace hopfg
