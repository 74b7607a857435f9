#pragma once

#include <stdexcept>
#include <string>

namespace ohsci {

// Thrown on file format violations and OS-level I/O failures.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a computation would be numerically meaningless
// (division by a degenerate scale, diverging optimization, ...).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ohsci
