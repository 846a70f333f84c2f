#pragma once

#include <stdexcept>
#include <string>

namespace iesat {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally invalid formula data: zero literal, variable index out of
// range, bad DIMACS header, clause count mismatch, and the like.
class MalformedError : public Error {
public:
    using Error::Error;
};

// Operation applied to the wrong normal form (e.g. taut on a CNF).
class KindError : public Error {
public:
    using Error::Error;
};

// Text could not be parsed. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : Error(msg), line(line), column(column) {}

    int line;
    int column;
};

// Invalid generator or solver configuration (e.g. clause width > variables).
class InvalidSpecError : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration refused: variable count above the configured cap.
class TooLargeError : public Error {
public:
    using Error::Error;
};

} // namespace iesat
