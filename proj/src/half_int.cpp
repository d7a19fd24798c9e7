#include "berezin/half_int.hpp"

#include <stdexcept>

namespace berezin {

namespace {

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size())
        throw std::invalid_argument("trailing characters in half-integer: '" + s + "'");
    return v;
}

}

HalfInt HalfInt::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty half-integer");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        int num = parse_int(s.substr(0, slash));
        int den = parse_int(s.substr(slash + 1));
        if (den == 1) return from_int(num);
        if (den == 2) return from_twice(num);
        throw std::invalid_argument("half-integer denominator must be 1 or 2: '" + s + "'");
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        int whole = parse_int(s.substr(0, dot));
        std::string frac = s.substr(dot + 1);
        if (frac == "0" || frac == "00") return from_int(whole);
        if (frac == "5" || frac == "50") {
            int t = 2 * whole + (s[0] == '-' ? -1 : 1);
            return from_twice(t);
        }
        throw std::invalid_argument("decimal spin must end in .0 or .5: '" + s + "'");
    }

    return from_int(parse_int(s));
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

}
