#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nodal {

/// Exact rational number, always kept in lowest terms with positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(mpq_class v);

    /// Parses "p" or "p/q" (optional sign, decimal digits only).
    static Scalar parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] long double to_long_double() const;

    /// Canonical text: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] Scalar abs() const;
    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(int exponent) const;

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Best rational approximation with denominator at most max_den (continued fractions).
Scalar rational_approximation(long double x, long max_den);

/// Exact square root when the argument is the square of a rational; returns false otherwise.
bool exact_sqrt(const Scalar& s, Scalar& root);

}  // namespace nodal
