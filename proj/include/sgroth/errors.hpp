#pragma once

#include <stdexcept>
#include <string>

namespace sgroth
{

// Base for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed partition or skew-shape text, or a non-partition sequence.
class ParseError : public Error
{
public:
    using Error::Error;
};

class ContainmentError : public Error
{
public:
    using Error::Error;
};

// Arithmetic between symmetric functions with different truncation profiles.
class ProfileMismatch : public Error
{
public:
    using Error::Error;
};

// A requested degree exceeds the truncation degree, or the profile itself is
// unfaithful (fewer variables than the degree).
class DegreeError : public Error
{
public:
    using Error::Error;
};

// An argument outside the supported domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

} // namespace sgroth
