#include "bellcert/rational.hpp"

#include <charconv>

namespace bellcert {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<std::int64_t> parse_int64(std::string_view s) {
    std::int64_t v = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        return std::nullopt;
    return v;
}

} // namespace

Rational Rational::make(i128 num, i128 den) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
        throw std::overflow_error("Rational: result does not fit in 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        const auto n = parse_int64(text);
        if (!n)
            return std::nullopt;
        return Rational(*n, 1);
    }
    const auto num = parse_int64(text.substr(0, slash));
    const auto den = parse_int64(text.substr(slash + 1));
    if (!num || !den || *den == 0)
        return std::nullopt;
    return Rational(*num, *den);
}

} // namespace bellcert
