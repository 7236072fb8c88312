#pragma once

#include <stdexcept>
#include <string>

namespace bressoud {

/* Base class for every error raised by this library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Malformed partition or overpartition text. */
class ParseError : public Error {
public:
    using Error::Error;
};

/* Parameter tuple violates the family constraints. */
class ParamError : public Error {
public:
    using Error::Error;
};

/* reduce/augment applied to an overpartition outside the required window class. */
class WindowMismatch : public Error {
public:
    using Error::Error;
};

/* Input fails a family membership precondition (B0bar, B1, Deta). */
class NotInFamilyError : public Error {
public:
    using Error::Error;
};

/* Band of the wrong width, not actually a band, or outside the requested window. */
class BandError : public Error {
public:
    using Error::Error;
};

/* Truncated series failures: degenerate or non-integral product exponents,
 * non-unit constant term under inversion, mismatched truncation bounds, or
 * 64-bit overflow. */
class SeriesError : public Error {
public:
    using Error::Error;
};

} // namespace bressoud
