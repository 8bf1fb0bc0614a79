#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodal/multipoly.hpp"
#include "nodal/scalar.hpp"

namespace nodal {

/// Dense univariate polynomial; coefficient of t^k at index k, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);
    UniPoly(std::initializer_list<Scalar> coeffs) : UniPoly(std::vector<Scalar>(coeffs)) {}
    UniPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
    UniPoly(long c) : UniPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    UniPoly(int c) : UniPoly(Scalar(c)) {}   // NOLINT(google-explicit-constructor)

    static UniPoly monomial(unsigned k, const Scalar& c = Scalar(1));
    /// The identity t.
    static UniPoly t() { return monomial(1); }
    /// Reads a polynomial in a single variable; throws if other variables occur.
    static UniPoly from_multipoly(const MultiPoly& p, std::string_view var);

    [[nodiscard]] MultiPoly to_multipoly(const std::string& var) const;
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return c_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    [[nodiscard]] Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    [[nodiscard]] Scalar operator()(const Scalar& x) const;
    [[nodiscard]] long double eval(long double x) const;
    [[nodiscard]] std::complex<long double> eval(std::complex<long double> x) const;

    [[nodiscard]] UniPoly derivative() const;
    [[nodiscard]] UniPoly monic() const;
    [[nodiscard]] UniPoly pow(unsigned e) const;
    /// p(q(t)).
    [[nodiscard]] UniPoly compose(const UniPoly& q) const;
    [[nodiscard]] std::string str(std::string_view var = "t") const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(const UniPoly& a) { return a * Scalar(-1); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
    friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws std::domain_error when the remainder is nonzero.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);
/// Sylvester resultant of univariate polynomials by their actual degrees.
Scalar resultant_univariate(const UniPoly& p, const UniPoly& q);

/// Number of distinct real roots in the half-open interval (lo, hi] (Sturm).
int count_real_roots(const UniPoly& p, const Scalar& lo, const Scalar& hi);

/// Distinct real roots in [lo, hi], isolated exactly and refined by bisection
/// to an interval of width at most tol. Returns midpoints in increasing order.
std::vector<long double> real_roots(const UniPoly& p, const Scalar& lo, const Scalar& hi, long double tol = 1e-15L);

/// All distinct real roots, using a Cauchy root bound.
std::vector<long double> real_roots(const UniPoly& p, long double tol = 1e-15L);

/// Isolating interval [lo, hi] of a simple real root; refine in place.
struct RootInterval {
    Scalar lo;
    Scalar hi;
};
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Scalar& lo, const Scalar& hi);
void refine_root(const UniPoly& squarefree, RootInterval& iv, const Scalar& width);

/// Complex roots of a nonzero polynomial with multiplicity (companion eigenvalues
/// polished by Newton).
std::vector<std::complex<long double>> complex_roots(const UniPoly& p);

/// Binary form sum_k c_k x0^(d-k) x1^k.
class BinaryForm {
public:
    BinaryForm() = default;
    explicit BinaryForm(std::vector<Scalar> coeffs);
    /// Reads a form homogeneous of some degree in exactly the two given variables.
    static BinaryForm from_multipoly(const MultiPoly& p, const std::string& x0, const std::string& x1);

    [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return c_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] BinaryForm d_x0() const;
    [[nodiscard]] BinaryForm d_x1() const;
    [[nodiscard]] MultiPoly to_multipoly(const std::string& x0, const std::string& x1) const;
    /// Dehomogenization in the chart x1 = 1, x0 = t.
    [[nodiscard]] UniPoly dehomogenize() const;

private:
    std::vector<Scalar> c_;
};

/// Homogeneous Sylvester resultant using the formal degrees.
Scalar resultant_univariate(const BinaryForm& f, const BinaryForm& g);

/// Discriminant normalized so that a x0^2 + b x0 x1 + c x1^2 gives b^2 - 4ac:
/// disc(f) = (-1)^(d(d-1)/2) res(f_x0, f_x1) / d^(d-2).
/// Zero exactly when f has a repeated factor (including a double root at infinity).
Scalar discriminant_binary(const BinaryForm& f);

/// Reduced quotient of univariate polynomials with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(UniPoly num, UniPoly den);
    RationalFunction(const UniPoly& p) : RationalFunction(p, UniPoly(1)) {}  // NOLINT

    [[nodiscard]] const UniPoly& numerator() const { return num_; }
    [[nodiscard]] const UniPoly& denominator() const { return den_; }
    [[nodiscard]] Scalar operator()(const Scalar& x) const;
    [[nodiscard]] long double eval(long double x) const;
    [[nodiscard]] RationalFunction derivative() const;
    [[nodiscard]] RationalFunction inverse() const;
    [[nodiscard]] std::string str(std::string_view var = "t") const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    UniPoly num_;
    UniPoly den_;
};

}  // namespace nodal
