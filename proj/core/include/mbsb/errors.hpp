#pragma once

#include <stdexcept>
#include <string>

namespace mbsb {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Red set was empty; the enclosing box is undefined.
struct empty_red_set : error {
    empty_red_set() : error("red point set is empty") {}
};

/// An input coordinate was NaN or infinite.
struct non_finite_input : error {
    non_finite_input() : error("input coordinate is not finite") {}
    explicit non_finite_input(const std::string& what) : error(what) {}
};

/// Point handed to classify() is not in the open annulus between s_min and s_max.
struct not_in_annulus : error {
    not_in_annulus() : error("point is not inside the s_min/s_max annulus") {}
};

/// Growth hit an unbounded direction; the separating box has infinite volume.
struct unbounded_result : error {
    unbounded_result() : error("growth is unbounded") {}
};

struct parse_error : error {
    parse_error(std::size_t line, const std::string& reason)
        : error("parse error at line " + std::to_string(line) + ": " + reason), line(line) {}
    std::size_t line;
};

struct unknown_generator : error {
    explicit unknown_generator(const std::string& name) : error("unknown generator: " + name) {}
};

struct invalid_parameters : error {
    explicit invalid_parameters(const std::string& what) : error(what) {}
};

/// The brute-force solver refuses inputs past its hard size cap.
struct oracle_cap_exceeded : error {
    explicit oracle_cap_exceeded(std::size_t m)
        : error("brute-force solver cap exceeded: m = " + std::to_string(m) + " > 14") {}
};

}  // namespace mbsb
