#pragma once

#include <stdexcept>
#include <string>

namespace burnout {

/// Malformed input file. `where` carries "path:line" or "path:line:field"
/// so CLI diagnostics can point at the offending cell.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Violated domain invariant (config or schedule structure, bad metric
/// preconditions). Distinct from ParseError so callers can map the two to
/// different exit codes.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace burnout
