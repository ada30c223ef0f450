#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace taut {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and every
/// arithmetic operation leaves the value canonicalized; two BigRats
/// compare equal iff their numerators and denominators are identical.
class BigRat {
public:
    BigRat() = default;
    BigRat(std::int64_t n);  // NOLINT(google-explicit-constructor)
    BigRat(std::int64_t num, std::int64_t den);
    explicit BigRat(const mpz_class& n);
    explicit BigRat(mpq_class q);

    /// Parses "n", "-n" or "n/d" (d != 0); result is canonicalized.
    /// Throws std::invalid_argument on anything else.
    static BigRat parse(std::string_view text);

    /// Canonical text: "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    BigRat& operator+=(const BigRat& o);
    BigRat& operator-=(const BigRat& o);
    BigRat& operator*=(const BigRat& o);
    /// Throws std::domain_error on division by zero.
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    BigRat operator-() const;

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b);

    friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

/// (2k-1)!! with the convention (-1)!! = 1.
BigRat double_factorial_odd(int k);
BigRat factorial(int n);
BigRat pow(const BigRat& base, unsigned exponent);

}  // namespace taut

template <>
struct std::hash<taut::BigRat> {
    std::size_t operator()(const taut::BigRat& r) const noexcept;
};
