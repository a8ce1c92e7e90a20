#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgvx {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: unknown vertex, bounds violation, invalid file contents.
class input_error : public error {
public:
    using error::error;
};

// Text that does not parse; carries a 1-based position.
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int col)
        : error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// An enumeration exceeded its configured ceiling.
class resource_limit_error : public error {
public:
    using error::error;
};

// Neither det M nor -det M has all-nonnegative coefficients.
class mixed_sign_error : public error {
public:
    explicit mixed_sign_error(const std::string& detail)
        : error("MixedSignDeterminant: " + detail) {}
};

// Invariant broken inside the engine (a bug, not bad input).
class internal_error : public error {
public:
    using error::error;
};

// Ceiling used by path/tuple/tiling enumerations. LGVX_LIMIT overrides the
// default when set to a positive integer.
std::size_t enumeration_limit();

} // namespace lgvx
