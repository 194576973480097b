#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace addgen {

// Raised when a search or enumeration exceeds its configured budget.
// Carries the best bounds established before the budget ran out, when any.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(std::string what,
                         std::optional<long long> lower = std::nullopt,
                         std::optional<long long> upper = std::nullopt)
        : std::runtime_error(std::move(what)), lower_(lower), upper_(upper) {}

    std::optional<long long> lower_bound() const { return lower_; }
    std::optional<long long> upper_bound() const { return upper_; }

private:
    std::optional<long long> lower_;
    std::optional<long long> upper_;
};

}  // namespace addgen
