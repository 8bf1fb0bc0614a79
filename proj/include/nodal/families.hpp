#pragma once

#include <array>
#include <string>
#include <vector>

#include "nodal/multipoly.hpp"
#include "nodal/scalar.hpp"

namespace nodal {

/// Homogeneous coordinates of P^3: x0..x3.
const std::vector<std::string>& x_coords();
/// Fibre coordinates of the P^2-bundle over P^3: y0, y1, y2.
const std::vector<std::string>& y_coords();
/// Fibre coordinates of the conic bundle over P^1 x P^1: w0, w1, w2.
const std::vector<std::string>& w_coords();
/// Ruling coordinates s0, s1, t0, t1.
const std::vector<std::string>& ruling_coords();

/// Q = x0*x3 - x1*x2.
MultiPoly quadric();

struct QuadricContext {
    MultiPoly Q;
    /// (x0, x1, x2, x3) -> (s0 t0, s0 t1, s1 t0, s1 t1).
    Substitution segre;
};
QuadricContext quadric_context();

/// A point (a0:a1; b0:b1) of P^1 x P^1.
struct RulingPoint {
    Scalar a0, a1, b0, b1;
};
/// Image (a0 b0 : a0 b1 : a1 b0 : a1 b1) on Q.
std::vector<Scalar> segre_point(const RulingPoint& p);
/// Inverse of the Segre map for a point of Q; throws if the point is off Q or zero.
RulingPoint ruling_point(const std::vector<Scalar>& x);

/// Grading by (s-degree, t-degree).
Grading ruling_grading();

enum class BundleSign { Minus, Plus };

struct ConicBundleSpec {
    unsigned n = 0;
    MultiPoly phi;
    BundleSign sign = BundleSign::Minus;
    /// w1 w2 - phi w0^2 (Minus) or w1 w2 + phi w0^2 (Plus).
    MultiPoly equation;
    /// Weights under the (a, b, c)-torus acting on (s; t; w0, w1, w2).
    [[nodiscard]] Grading grading() const;
};

/// Throws std::invalid_argument unless phi is bihomogeneous of type (n, n) in s, t.
ConicBundleSpec conic_bundle(unsigned n, const MultiPoly& phi, BundleSign sign = BundleSign::Minus);

/// The pair of equations y1 y2 - Phi y0^2 and alpha2 y1 + alpha1 y2 - Q y0.
/// Coefficients may involve symbolic parameters besides the x- and y-coordinates.
struct DeformationSpec {
    MultiPoly K;
    MultiPoly L;
    MultiPoly Q;
    MultiPoly alpha1;
    MultiPoly alpha2;
    /// Phi = K L for the displayed families, -K L for the torus family.
    MultiPoly Phi;
    MultiPoly first;
    MultiPoly second;

    /// Q^2 - 4 alpha1 alpha2 Phi.
    [[nodiscard]] MultiPoly branch() const;
    [[nodiscard]] MultiPoly alpha_product() const { return alpha1 * alpha2; }
};

/// Equations with an arbitrary quartic Phi in place of K L.
DeformationSpec deformation_from_phi(const MultiPoly& Phi, const MultiPoly& alpha1, const MultiPoly& alpha2,
                                     const MultiPoly& Q = quadric());

/// Requires K of degree 3 and L of degree 1 in x (other variables act as coefficients).
DeformationSpec deformation_family(const MultiPoly& K, const MultiPoly& L, const MultiPoly& alpha1,
                                   const MultiPoly& alpha2, const MultiPoly& Q = quadric());

/// Q^2 - 4 alpha_product K L.
MultiPoly branch_quartic(const MultiPoly& K, const MultiPoly& L, const MultiPoly& alpha_product,
                         const MultiPoly& Q = quadric());

/// a1 b1 x0 - a1 b0 x1 - a0 b1 x2 + a0 b0 x3; entries may be symbolic.
MultiPoly tangent_plane(const MultiPoly& a0, const MultiPoly& a1, const MultiPoly& b0, const MultiPoly& b1);
MultiPoly tangent_plane(const RulingPoint& p);

struct FourteenNodalParams {
    Scalar a0 = 1, a1 = 0, b0 = 1, b1 = 0;
    Scalar lambda = 0, mu = 0;
    MultiPoly K1, K2;
    Scalar alpha1 = 0, alpha2 = 0;
};

struct FourteenNodalFamily {
    FourteenNodalParams params;
    /// (a1 - lambda a0)(b1 - mu b0).
    Scalar factor;
    MultiPoly L0, L1, L2, L3;
    /// x0 x3 - x1 x2 + factor alpha1 alpha2 K1 K2.
    MultiPoly Q;
    DeformationSpec spec;
    /// Q^2 - 4 alpha1 alpha2 K1 K2 L0 L3.
    MultiPoly quartic;
};

/// Throws std::invalid_argument naming the vanishing factor when the point lies on a line of L0.
FourteenNodalFamily fourteen_nodal_family(const FourteenNodalParams& p);

/// The four tangent planes for symbolic entries.
std::array<MultiPoly, 4> fourteen_nodal_planes(const MultiPoly& a0, const MultiPoly& a1, const MultiPoly& b0,
                                               const MultiPoly& b1, const MultiPoly& lambda, const MultiPoly& mu);

struct TorusParams {
    /// K(t, 1) = A0 + A1 t + A2 t^2 + A3 t^3 with A = {A0, A1, A2, A3}.
    std::array<Scalar, 4> A{0, 0, 0, 1};
    Scalar s = 0;
    Scalar alpha1 = 0, alpha2 = 0;

    /// K = (a1 x0 + b1 x3)(a2 x0 + b2 x3)(a3 x0 + b3 x3).
    static TorusParams from_factors(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b);
};

/// A0..A3 as symmetric functions of the factor coefficients.
std::array<MultiPoly, 4> torus_coefficients(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& b);

/// A3 x0^3 + A2 x0^2 x3 + A1 x0 x3^2 + A0 x3^3.
MultiPoly torus_cubic(const std::array<Scalar, 4>& A);
MultiPoly torus_cubic(const std::array<MultiPoly, 4>& A);

/// Equations y1 y2 + K L y0^2 = 0, alpha2 y1 + alpha1 y2 - Q y0 = 0 with L = x0 + s x3.
DeformationSpec torus_family(const TorusParams& p);

/// Linear form with coefficient vector grad Q(P) - aa grad K(P). Requires Q(P) = 2 aa K(P)
/// exactly and K(P) != 0 when aa != 0.
MultiPoly l_from_point(const MultiPoly& K, const Scalar& alpha_product, const std::vector<Scalar>& P);

/// Q(P) / (2 K(P)), the alpha-product placing P on the blow-up locus Q - 2 aa K = 0.
Scalar alpha_product_for_point(const MultiPoly& K, const std::vector<Scalar>& P);

/// x, y, z, xp, yp, zp as quadrics in z0..z3.
Substitution segre_parametrization();
/// a, b, c, ap, bp, cp as quartics in z0..z3.
Substitution igusa_parametrization();

/// Kummer-section parameters. Entries may be symbolic; zero alphas are allowed.
struct KummerParams {
    MultiPoly alpha1 = MultiPoly(0), alpha2 = MultiPoly(0);
    MultiPoly a0 = MultiPoly(1), a1 = MultiPoly(1), b0 = MultiPoly(1), b1 = MultiPoly(1);
    /// Solve the linear relation for c and substitute it everywhere.
    bool eliminate_c = false;
};

struct KummerFamily {
    /// c'' in the coordinates a, b, c, ap, bp.
    MultiPoly c2;
    /// Coefficient of c in the linear relation.
    MultiPoly c_coefficient;
    /// y1 y2 + a ap c c'' y0^2.
    MultiPoly first;
    /// alpha2 y1 + alpha1 y2 - (-aa c c'' + a ap - b bp) y0.
    MultiPoly second;
    /// a + b + c + ap + bp - aa c''; zero when c has been eliminated.
    MultiPoly relation;
    /// (-aa c c'' + a ap - b bp)^2 + 4 aa a ap c c''.
    MultiPoly branch;
    /// When eliminated: c as a rational expression num / c_coefficient.
    MultiPoly c_numerator;
};

/// Throws std::invalid_argument if eliminate_c is requested and the c-coefficient is zero.
KummerFamily kummer_family(const KummerParams& p);

}  // namespace nodal
