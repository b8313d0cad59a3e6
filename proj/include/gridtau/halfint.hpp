#pragma once

// Exact half-integer arithmetic.  Gradings in this project are integers or
// half-integers; we store the doubled value so everything stays in int64.

#include <compare>
#include <cstdint>
#include <string>

namespace gridtau {

struct Half {
    std::int64_t twice = 0;  // the represented value is twice/2

    static constexpr Half from_twice(std::int64_t t) { return Half{t}; }
    static constexpr Half whole(std::int64_t v) { return Half{2 * v}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr std::int64_t as_integer() const { return twice / 2; }

    friend constexpr Half operator+(Half a, Half b) { return Half{a.twice + b.twice}; }
    friend constexpr Half operator-(Half a, Half b) { return Half{a.twice - b.twice}; }
    friend constexpr Half operator-(Half a) { return Half{-a.twice}; }
    friend constexpr auto operator<=>(Half a, Half b) = default;

    // "3", "-1", "5/2", "-1/2"
    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

}  // namespace gridtau
