// Error types for the exact-arithmetic pipeline. Everything is thrown as a
// subclass of quintic::error; parse_error carries the input position.

#ifndef QUINTIC_ERRORS_HPP
#define QUINTIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quintic {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct unknown_symbol : error {
    explicit unknown_symbol(const std::string& name) : error("unknown symbol: " + name) {}
};

struct wrong_ring : error {
    using error::error;
};

// Operation has no mathematical value on the given input (Res(0,0), disc of deg<2, ...).
struct undefined_operation : error {
    using error::error;
};

struct degree_error : error {
    using error::error;
};

struct not_defined : error {
    using error::error;
};

// An identity that must hold during covariant-table construction failed;
// signals an implementation bug, never bad user input.
struct construction_error : error {
    using error::error;
};

struct degenerate_specialization : error {
    using error::error;
};

struct not_invertible : error {
    using error::error;
};

struct search_failed : error {
    using error::error;
};

struct repeated_roots : error {
    using error::error;
};

struct internal_error : error {
    using error::error;
};

struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace quintic

#endif
