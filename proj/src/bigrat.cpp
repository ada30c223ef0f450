#include "taut/bigrat.hpp"

#include <stdexcept>

namespace taut {

BigRat::BigRat(std::int64_t n) : value_(static_cast<long>(n)) {}

BigRat::BigRat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
}

BigRat::BigRat(const mpz_class& n) : value_(n) {}

BigRat::BigRat(mpq_class q) : value_(std::move(q)) {
    if (value_.get_den() == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s.front() == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

BigRat BigRat::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) return BigRat(mpz_class{std::string(num)});
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return BigRat(mpq_class(mpz_class{std::string(num)}, d));
}

std::string BigRat::str() const { return value_.get_str(); }

BigRat& BigRat::operator+=(const BigRat& o) {
    value_ += o.value_;
    return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) {
    value_ -= o.value_;
    return *this;
}

BigRat& BigRat::operator*=(const BigRat& o) {
    value_ *= o.value_;
    return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

BigRat BigRat::operator-() const { return BigRat(mpq_class(-value_)); }

std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigRat double_factorial_odd(int k) {
    mpz_class acc = 1;
    for (int j = 2 * k - 1; j > 1; j -= 2) acc *= j;
    return BigRat(acc);
}

BigRat factorial(int n) {
    mpz_class acc;
    mpz_fac_ui(acc.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return BigRat(acc);
}

BigRat pow(const BigRat& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return BigRat(mpq_class(num, den));
}

}  // namespace taut

std::size_t std::hash<taut::BigRat>::operator()(const taut::BigRat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
}
