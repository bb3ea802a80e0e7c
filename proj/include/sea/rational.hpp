#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sea {

// Raised when exact arithmetic leaves the 64-bit range.
struct ArithmeticOverflow : std::runtime_error {
    ArithmeticOverflow() : std::runtime_error("exact rational arithmetic overflow") {}
};

// Exact rational number. Invariant: lowest terms, denominator > 0.
// All arithmetic is exact; results that do not fit in 64 bits after
// reduction throw ArithmeticOverflow instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "0", "1", "-3", "2/3", ...
    std::string str() const;

    // Accepts "p" or "p/q" with optional sign; nullopt on malformed input.
    static std::optional<Rational> parse(std::string_view text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace sea
