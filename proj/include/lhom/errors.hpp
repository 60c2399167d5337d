#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lhom {

/// Bad caller input: shape/field mismatches, out-of-range indices, malformed arguments.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed document: syntax or schema. `where` locates the problem
/// (byte offset for syntax, a key path for schema).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

}  // namespace lhom
