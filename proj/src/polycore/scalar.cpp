#include "nodal/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace nodal {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw std::invalid_argument("Scalar: cannot parse '" + std::string(text) + "'");
    }
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10);
    mpz_class zd(std::string(den), 10);
    if (zd == 0) throw std::domain_error("Scalar: zero denominator in '" + std::string(text) + "'");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Scalar(q);
}

long double Scalar::to_long_double() const {
    // Split into integer part and fraction to keep extra bits beyond double.
    mpz_class ip = value_.get_num() / value_.get_den();
    mpq_class frac = value_ - mpq_class(ip);
    return static_cast<long double>(ip.get_d()) + static_cast<long double>(frac.get_d());
}

std::string Scalar::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(value_))); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(mpq_class(1 / value_));
}

Scalar Scalar::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Scalar(mpq_class(n, d));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar rational_approximation(long double x, long max_den) {
    // Convergents h/k of the continued fraction of x.
    long double r = x;
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(r));
    mpz_class k_prev = 0, k = 1;
    long double frac = r - std::floor(r);
    for (int iter = 0; iter < 64 && frac > 1e-30L; ++iter) {
        r = 1.0L / frac;
        const auto a = static_cast<long>(std::floor(r));
        frac = r - std::floor(r);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
    }
    return Scalar(mpq_class(h, k));
}

bool exact_sqrt(const Scalar& s, Scalar& root) {
    if (s.sign() < 0) return false;
    mpz_class n = s.numerator(), d = s.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Scalar(mpq_class(rn, rd));
    return true;
}

}  // namespace nodal
