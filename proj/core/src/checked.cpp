#include "cayley/checked.hpp"

#include <algorithm>

namespace cayley {

std::string to_string(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    // Negate digit by digit to survive the minimum value.
    std::string out;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        v /= 10;
        if (d < 0) d = -d;
        out.push_back(static_cast<char>('0' + d));
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace cayley
