#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "gem/error.hpp"

namespace gem {

// Exact arithmetic over multiples of 1/2. The value is stored as twice
// itself, so genera and G-degrees never touch floating point.
class HalfInteger {
public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(std::int64_t twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInteger whole(std::int64_t n) { return from_twice(2 * n); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    std::int64_t integer_value() const {
        if (!is_integer())
            throw GemError(ErrorKind::IntegralityViolation,
                           "half-integer " + str() + " used where an integer is required");
        return twice_ / 2;
    }

    constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInteger operator-() const { return from_twice(-twice_); }
    constexpr HalfInteger operator*(std::int64_t k) const { return from_twice(twice_ * k); }
    HalfInteger& operator+=(HalfInteger o) {
        twice_ += o.twice_;
        return *this;
    }
    HalfInteger& operator-=(HalfInteger o) {
        twice_ -= o.twice_;
        return *this;
    }

    constexpr auto operator<=>(const HalfInteger&) const = default;

    // "n" for integers, "k/2" otherwise (e.g. "3/2", "-1/2"); never decimals.
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    std::int64_t twice_ = 0;
};

constexpr HalfInteger operator*(std::int64_t k, HalfInteger h) { return h * k; }

} // namespace gem
