#pragma once

#include <stdexcept>
#include <string>

namespace dopt {

// Library-wide error taxonomy. Every precondition violation maps to one of
// these; nothing is reported through return codes or silent wrapping.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Length/shape mismatches, non-square inputs, spec/run shape conflicts.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Row or column index outside the matrix.
class IndexError : public Error {
public:
    using Error::Error;
};

// Order outside a documented cap (determinant engine, search, bounds range).
class OrderError : public Error {
public:
    using Error::Error;
};

// An exact-integer intermediate left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A matrix required to be nonsingular has zero determinant, or an assembled
// design came out singular.
class SingularError : public Error {
public:
    using Error::Error;
};

// Input not in the required matrix class (first column, residue, block form).
class ClassError : public Error {
public:
    using Error::Error;
};

// Requested order has no embedded catalog entry or witness.
class CatalogError : public Error {
public:
    using Error::Error;
};

// Malformed glyph/CSV/JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace dopt
