#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/scalar.hpp"

namespace nodal {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

/// Sparse multivariate polynomial over the rationals with named variables.
///
/// Binary operations merge variable registries by name: the result keeps the
/// left operand's variables in order, followed by variables that only occur on
/// the right. Registries may contain variables that no term uses.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);
    MultiPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(int c) : MultiPoly(Scalar(c)) {}   // NOLINT(google-explicit-constructor)

    static MultiPoly variable(const std::string& name);
    static MultiPoly constant(const Scalar& c, std::vector<std::string> variables = {});
    static MultiPoly monomial(std::vector<std::string> variables, Exponent e, Scalar coeff = Scalar(1));
    /// Linear form sum_i coeffs[i] * variables[i].
    static MultiPoly linear(const std::vector<std::string>& variables, std::span<const Scalar> coeffs);

    /// Parses the canonical text form. Without an explicit registry, variables
    /// are registered in natural order (alphabetic, numeric suffixes by value).
    static MultiPoly parse(std::string_view text);
    static MultiPoly parse(std::string_view text, const std::vector<std::string>& variables);

    [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
    [[nodiscard]] bool has_variable(std::string_view name) const { return index_of(name).has_value(); }
    /// Variables that occur with nonzero exponent in some term.
    [[nodiscard]] std::vector<std::string> used_variables() const;

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Scalar constant_term() const;
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] int degree_in(std::string_view name) const;
    [[nodiscard]] bool is_homogeneous() const;
    /// Homogeneity restricted to a subset of variables (the others act as coefficients).
    [[nodiscard]] bool is_homogeneous_in(const std::vector<std::string>& subset, int* degree = nullptr) const;
    /// Coefficient of the graded-lex leading term; zero for the zero polynomial.
    [[nodiscard]] Scalar leading_coefficient() const;
    [[nodiscard]] Scalar coefficient(const Exponent& e) const;

    /// Writes p = sum_k c_k * name^k and returns [c_0, ..., c_deg].
    [[nodiscard]] std::vector<MultiPoly> coefficients_in(std::string_view name) const;

    /// Same polynomial over a different registry; throws if a used variable is missing.
    [[nodiscard]] MultiPoly with_variables(const std::vector<std::string>& variables) const;

    [[nodiscard]] MultiPoly pow(unsigned exponent) const;
    [[nodiscard]] std::string str() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& c);
    MultiPoly& operator/=(const Scalar& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(MultiPoly a, long c) { return a *= Scalar(c); }
    friend MultiPoly operator*(long c, MultiPoly a) { return a *= Scalar(c); }
    friend MultiPoly operator*(MultiPoly a, int c) { return a *= Scalar(c); }
    friend MultiPoly operator*(int c, MultiPoly a) { return a *= Scalar(c); }
    friend MultiPoly operator/(MultiPoly a, const Scalar& c) { return a /= c; }
    friend MultiPoly operator-(const MultiPoly& a);

    /// Equality of polynomials as functions of named variables (registries may differ).
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Adds c * x^e; exponent length must match the registry.
    void add_term(const Exponent& e, const Scalar& c);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Natural ordering of variable names: "x2" < "x10", "a" < "b".
bool natural_less(std::string_view a, std::string_view b);

/// Merged registry: a's variables, then b's variables not in a.
std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

MultiPoly differentiate(const MultiPoly& p, std::string_view var);
std::vector<MultiPoly> gradient(const MultiPoly& p, const std::vector<std::string>& vars);

using Substitution = std::map<std::string, MultiPoly>;

/// Simultaneous substitution of polynomials for variables.
MultiPoly substitute(const MultiPoly& p, const Substitution& assignments);

/// tau after sigma: the map v -> substitute(sigma(v), tau), plus tau's own entries.
Substitution compose(const Substitution& sigma, const Substitution& tau);

/// Exact value at a point given in registry order.
Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point);
/// Exact value with named assignments; every used variable must be assigned.
Scalar evaluate(const MultiPoly& p, const std::map<std::string, Scalar>& point);

/// Exact division; throws std::domain_error when the divisor does not divide.
MultiPoly divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);

/// Determinant of a square polynomial matrix (fraction-free Bareiss elimination).
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Sylvester resultant with respect to one variable.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Discriminant b^2 - 4ac of a polynomial of degree exactly two in var.
MultiPoly quadratic_discriminant(const MultiPoly& p, std::string_view var);

/// Weight vector per variable; variables absent from the map have weight zero.
using Grading = std::map<std::string, std::vector<int>>;

/// Weighted degree of each term; returns nullopt unless all terms agree.
std::optional<std::vector<int>> multidegree(const MultiPoly& p, const Grading& grading);
bool is_homogeneous(const MultiPoly& p, const Grading& grading);

}  // namespace nodal
