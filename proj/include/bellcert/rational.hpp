#ifndef BELLCERT_RATIONAL_HPP
#define BELLCERT_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellcert {

// Exact rational on int64, always normalized (den > 0, gcd(|num|, den) = 1).
// Arithmetic goes through 128-bit intermediates and throws std::overflow_error
// if a result does not fit; callers on the exact path fall back to doubles.
// Denominators in this problem domain are tiny (125, 100, ...), so the
// overflow path is a safety net, not a code path tests should ever hit.
class Rational {
  public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = checked_negate(num_);
            den_ = checked_negate(den_);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Rational from_int(std::int64_t n) { return Rational(n, 1); }

    // Accepts "num/den" (whitespace-free) and plain integers; anything else
    // yields nullopt so the caller can treat the token as a float instead.
    static std::optional<Rational> parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Canonical "num/den" form, e.g. "1/2", "18/125", "0/1".
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::invalid_argument("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  private:
    using i128 = __int128;

    static std::int64_t checked_negate(std::int64_t v) {
        if (v == std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("Rational: negation overflow");
        return -v;
    }

    static Rational make(i128 num, i128 den); // normalizes, checks fit

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace bellcert

#endif
