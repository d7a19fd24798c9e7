#pragma once

#include <compare>
#include <string>

namespace berezin {

// Half-integer spin label stored as its doubled value, so j = 7/2 has
// twice() == 7.  All parity and range checks reduce to integer arithmetic.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt from_int(int n) { return from_twice(2 * n); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // true when this - other is an integer
    constexpr bool same_parity(HalfInt other) const {
        return ((twice_ ^ other.twice_) & 1) == 0;
    }
    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }
    double to_double() const { return 0.5 * twice_; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // Accepts "7/2", "3.5", "-2", "4".  Throws std::invalid_argument otherwise.
    static HalfInt parse(const std::string& s);

    // Canonical form: "7/2" when odd, "4" when integer.
    std::string str() const;

private:
    int twice_ = 0;
};

}
