#pragma once

#include <stdexcept>
#include <string>

namespace inccoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in character rings of different rank, or a vector has the wrong length.
class DimensionMismatch : public Error
{
public:
    using Error::Error;
};

/// An argument is structurally invalid (e.g. a Frobenius exponent that is not a prime power).
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// An integer argument lies outside the domain of the operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// The operation only exists for a particular n (most character formulas need n = 3).
class UnsupportedRank : public Error
{
public:
    using Error::Error;
};

class EmptyCharacter : public Error
{
public:
    using Error::Error;
};

/// A line bundle outside the chamber a >= -b-n+1 >= 0, b <= -n was handed to a chamber-only rule.
class OutOfRegion : public Error
{
public:
    using Error::Error;
};

/// A closed formula was queried outside the parameter range where it holds.
class OutOfRange : public Error
{
public:
    using Error::Error;
};

class WeightMismatch : public Error
{
public:
    using Error::Error;
};

/// The regularity scan found no nonzero H^1 below its ceiling.
class ScanExhausted : public Error
{
public:
    using Error::Error;
};

class NoHighestWeight : public Error
{
public:
    using Error::Error;
};

} // namespace inccoh
