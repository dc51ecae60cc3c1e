#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satlab {

/// Raised on malformed graph6 input; `offset` is the 0-based byte position.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")")
        , offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Raised when the exact triangle-packing search exceeds its node budget.
class PackingBudgetError : public std::runtime_error {
public:
    explicit PackingBudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace satlab
