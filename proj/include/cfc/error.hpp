#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `where()` is a 1-based line number for edge
/// lists and a 0-based byte offset for graph6.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t where)
        : Error(what), where_(where) {}
    std::size_t where() const noexcept { return where_; }

private:
    std::size_t where_;
};

class DisconnectedError : public Error {
public:
    DisconnectedError() : Error("graph is not connected") {}
};

/// The input lies outside the shapes a closed form covers (e.g. a tree of
/// diameter >= 5). Callers may fall back to the exact solver.
class UnsupportedShape : public Error {
public:
    using Error::Error;
};

/// The exact search ran out of budget. Every k < proven_lo is known to fail.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, int proven_lo, int hi)
        : Error(what), proven_lo_(proven_lo), hi_(hi) {}
    int proven_lo() const noexcept { return proven_lo_; }
    int hi() const noexcept { return hi_; }

private:
    int proven_lo_;
    int hi_;
};

}  // namespace cfc
