#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nodal/families.hpp"
#include "nodal/multipoly.hpp"
#include "nodal/univariate.hpp"

namespace nodal {

/// One identity: each computed side must equal its displayed side.
struct IdentityCase {
    std::string name;
    std::string anchor;
    std::vector<std::pair<MultiPoly, MultiPoly>> sides;
};

struct IdentityReport {
    std::string name;
    std::string anchor;
    /// First nonzero computed - displayed, or zero.
    MultiPoly witness;
    [[nodiscard]] bool passed() const { return witness.is_zero(); }
    [[nodiscard]] std::string status() const { return passed() ? "pass" : "fail"; }
};

IdentityReport check(const IdentityCase& c);

/// Copies of c with one displayed coefficient raised by 1 (a constant 1 added to zero sides).
std::vector<IdentityCase> perturbations(const IdentityCase& c);

/// v_{i;j} substituted into the 2x2 minors of the blow-down matrix and the two chart equations.
IdentityCase verify_chart_blowdown(unsigned n);

/// (y0:y1:y2) = (w0 : psi2 w1 : psi1 w2) over x = (s0t0, s0t1, s1t0, s1t1).
/// A first side checks psi1 psi2 = L restricted to Q.
IdentityCase verify_birational_map(const MultiPoly& K, const MultiPoly& L, const MultiPoly& psi1,
                                   const MultiPoly& psi2);

/// Resultant in y1 against the displayed quadratic in y2, and its y2-discriminant.
IdentityCase verify_elimination(const MultiPoly& K, const MultiPoly& L, const MultiPoly& Q);
/// alpha2 = 0: the resultant in y2 equals -y0 (y1 Q - alpha1 K L y0).
IdentityCase verify_delta_reduction(const MultiPoly& K, const MultiPoly& L, const MultiPoly& Q);

/// L0 L3 - L1 L2 = (a1 - lambda a0)(b1 - mu b0) Q for the planes of the 14-nodal family.
IdentityCase verify_tangent_product(const MultiPoly& a0, const MultiPoly& a1, const MultiPoly& b0,
                                    const MultiPoly& b1, const MultiPoly& lambda, const MultiPoly& mu);

/// Adding M y0 times the linear equation to the conic equation.
IdentityCase verify_trivial_deformation(const MultiPoly& Phi, const MultiPoly& M, const MultiPoly& Q);

/// Chart z0 = 1 = y0 of the rank condition with K a formal symbol: y2 = L z1 and K = y1 z1 kill every minor.
IdentityCase verify_small_resolution_chart(const MultiPoly& L);

IdentityCase verify_segre();
IdentityCase verify_igusa_hyperplane();
/// sqrt(aa') + sqrt(bb') + sqrt(cc') = 0 rationalized, on the parametrization.
IdentityCase verify_igusa_quartic();

/// Elimination of y1 from the Kummer-section equations reproduces the rational branch form.
IdentityCase verify_kummer_branch(const KummerParams& p);
/// On a = 0 the conic equation becomes y1 y2.
IdentityCase verify_kummer_reducible(const KummerParams& p);

/// Polynomial with Gaussian-rational coefficients.
struct GaussPoly {
    MultiPoly re = MultiPoly(0), im = MultiPoly(0);

    GaussPoly() = default;
    GaussPoly(MultiPoly r, MultiPoly i = MultiPoly(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
    static GaussPoly i() { return {MultiPoly(0), MultiPoly(1)}; }

    [[nodiscard]] GaussPoly conj() const { return {re, -im}; }
    [[nodiscard]] GaussPoly substitute(const Substitution& s) const;

    friend GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussPoly operator-(const GaussPoly& a, const GaussPoly& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussPoly& a, const GaussPoly& b) { return a.re == b.re && a.im == b.im; }
};

/// Conjugate coefficients, then swap x1/x2, y1/y2 and alpha1/alpha2.
GaussPoly real_involution(const GaussPoly& p);

/// Both defining equations are fixed by the involution; real and imaginary parts are separate sides.
IdentityCase verify_real_structure(const GaussPoly& first, const GaussPoly& second);

/// Weights of the (a, b, lambda)-action on the defining equations.
IdentityCase verify_scaling_invariance(const MultiPoly& Phi, const MultiPoly& Q = quadric());

struct ContactConic {
    /// det / (lambda mu) as a quartic in (lambda, mu).
    BinaryForm quartic;
    /// det of the symmetric matrix of lambda^2 L1 L2 + 2 lambda mu Q + mu^2 L3 L4 on the plane.
    MultiPoly determinant;
};

/// The plane is spanned by three points of P^3. Throws if det is not divisible by lambda mu.
ContactConic contact_conic_degeneration(const std::array<MultiPoly, 4>& L, const MultiPoly& Q,
                                        const std::array<std::vector<Scalar>, 3>& plane);
/// Terms of the determinant not divisible by lambda mu.
IdentityCase verify_contact_conic(const std::array<MultiPoly, 4>& L, const MultiPoly& Q,
                                  const std::array<std::vector<Scalar>, 3>& plane);

/// Suite names, "all" first.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<IdentityCase> suite_cases(const std::string& suite);
/// Checks run in parallel; the reports keep the case order.
std::vector<IdentityReport> run_suite(const std::string& suite, unsigned threads = 0);

}  // namespace nodal
