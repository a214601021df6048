#pragma once

#include <stdexcept>
#include <string>

namespace graphjac {

// Malformed input: bad file contents, out-of-range vertices, invalid parameters.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Computation refused: size guards, disconnected graphs, Euler check failures.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graphjac
