#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace signrank {

// entry of a plain sign pattern
enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

// entry of a generalized sign pattern; any = '#', stands for an unconstrained entry
enum class GenSign : std::int8_t { minus = -1, zero = 0, plus = 1, any = 2 };

inline GenSign to_gen(Sign s) { return static_cast<GenSign>(s); }

inline Sign to_sign(GenSign g) {
    if (g == GenSign::any) throw std::invalid_argument("'#' has no plain sign");
    return static_cast<Sign>(g);
}

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline GenSign negate(GenSign g) {
    if (g == GenSign::any) return GenSign::any;
    return to_gen(negate(to_sign(g)));
}

// sign of a - b; '#' exactly when a == b != 0 (the difference can then land anywhere)
inline GenSign sign_sub(Sign a, Sign b) {
    if (a == b) return a == Sign::zero ? GenSign::zero : GenSign::any;
    int d = static_cast<int>(a) - static_cast<int>(b);
    return d > 0 ? GenSign::plus : GenSign::minus;
}

inline char to_char(GenSign g) {
    switch (g) {
        case GenSign::plus: return '+';
        case GenSign::minus: return '-';
        case GenSign::zero: return '0';
        case GenSign::any: return '#';
    }
    throw std::logic_error("corrupt GenSign");
}

inline char to_char(Sign s) { return to_char(to_gen(s)); }

inline GenSign gen_sign_from_char(char c) {
    switch (c) {
        case '+': return GenSign::plus;
        case '-': return GenSign::minus;
        case '0': return GenSign::zero;
        case '#': return GenSign::any;
        default: throw std::invalid_argument(std::string("bad sign token '") + c + "'");
    }
}

}  // namespace signrank
