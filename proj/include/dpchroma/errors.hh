#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dpchroma {

/// Malformed or inconsistent input (graph text, cover JSON, vertex sets, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured search or enumeration cap was exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact 64-bit count arithmetic; throws instead of wrapping.
class CountOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw CountOverflow("count overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw CountOverflow("count overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CountOverflow("count overflow in multiplication");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, std::size_t exp)
{
    std::int64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

} // namespace dpchroma
