#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace ginipart {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a computation would exceed a configured size budget.
/// The message names the budget that would be required.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, BigInt needed, std::int64_t allowed)
        : std::runtime_error(what), needed_(std::move(needed)), allowed_(allowed) {}

    const BigInt& needed() const noexcept { return needed_; }
    std::int64_t allowed() const noexcept { return allowed_; }

private:
    BigInt needed_;
    std::int64_t allowed_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// m*(m-1)/2, exact in 64 bits or std::overflow_error.
std::int64_t binom2(std::int64_t m);

/// Smallest integer >= x. Must fit in 64 bits.
std::int64_t ceil_to_int(const Rational& x);

}  // namespace ginipart
