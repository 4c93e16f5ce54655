#ifndef BELLCERT_ERRORS_HPP
#define BELLCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellcert {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input document could not be mapped onto a domain type. The message names
// the offending field.
struct ParseError : Error {
    using Error::Error;
};

// An operation that requires a complete table was given a partial one.
struct PartialTable : Error {
    using Error::Error;
};

// A marginal (or single-outcome marginal) needs entries that are absent.
struct MissingEntries : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidPovm : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

// rho_yb conditioning on an outcome of (numerically) zero probability.
struct ZeroMarginal : Error {
    using Error::Error;
};

// Renyi order n <= 0 (or exactly 1, where the formula is undefined).
struct InvalidOrder : Error {
    using Error::Error;
};

// entropy_lower_bound on a table whose purity bound vanishes.
struct InfiniteBound : Error {
    using Error::Error;
};

struct EtaOutOfRange : Error {
    using Error::Error;
};

} // namespace bellcert

#endif
