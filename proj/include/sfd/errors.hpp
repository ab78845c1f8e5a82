#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sfd {

// Raised by the polynomial parser. `position` is the 1-based byte offset of
// the offending character in the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Raised when an enumeration would exceed the configured point budget.
// Exceeding the budget is always an error, never a silent approximation.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what_enumeration, std::uint64_t required,
                std::uint64_t budget)
        : std::runtime_error(what_enumeration + " needs " + std::to_string(required) +
                             " points but the budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace sfd
