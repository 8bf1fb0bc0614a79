#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nodal/multipoly.hpp"
#include "nodal/univariate.hpp"

namespace nodal {

/// A projective plane curve (c0 : c1 : c2) with components homogeneous in x0, x3.
/// Coefficients may involve further symbols (A0..A3).
struct PlaneCurveParam {
    std::array<MultiPoly, 3> components;

    /// Components in the chart x0 = t, x3 = 1; requires numeric coefficients.
    [[nodiscard]] std::array<UniPoly, 3> affine() const;
};

/// (c_i d_j = c_j d_i for all i, j) with a nonzero constant ratio.
bool projectively_equal(const PlaneCurveParam& a, const PlaneCurveParam& b);

/// A0..A3 as MultiPoly constants.
std::array<MultiPoly, 4> coefficient_polys(const std::array<Scalar, 4>& A);
/// Symbols A0, A1, A2, A3.
std::array<MultiPoly, 4> symbolic_coefficients();

/// beta x0^2 x3^2 + 4 K (x0 + s x3) as a binary quartic in (x0, x3).
BinaryForm multiple_root_form(const std::array<Scalar, 4>& A, const Scalar& beta, const Scalar& s);
Scalar multiple_root_condition(const std::array<Scalar, 4>& A, const Scalar& beta, const Scalar& s);

/// (x0^2 x3^2 : x0 K : x3 K), common factor removed.
PlaneCurveParam dual_quartic_param(const std::array<MultiPoly, 4>& A);
PlaneCurveParam dual_quartic_param(const std::array<Scalar, 4>& A);

/// Cross product of the two partial-derivative vectors of the quartic's
/// parametrization, written in (beta : s : 1) coordinates of the lines
/// beta x0^2 x3^2 + 4 x0 K + 4 s x3 K, common factor removed.
PlaneCurveParam dual_curve_param(const std::array<MultiPoly, 4>& A);
PlaneCurveParam dual_curve_param(const std::array<Scalar, 4>& A);

/// The closed form (-4K^2 : x0^2 x3 (2K - x3 K3) : x0 x3^2 (2K - x0 K0)).
PlaneCurveParam dual_curve_closed_form(const std::array<MultiPoly, 4>& A);

struct LocusCurve {
    RationalFunction s;
    RationalFunction alpha_product;

    /// beta = 1 / alpha_product.
    [[nodiscard]] RationalFunction beta() const { return alpha_product.inverse(); }
};

/// s(t) and alpha1 alpha2 (t) from the dual curve in the chart x0 = t, x3 = 1.
LocusCurve torus_locus(const std::array<Scalar, 4>& A);

/// The printed formulas -t(A0 - A2 t^2 - 2 A3 t^3)/(2A0 + A1 t - A3 t^3) and
/// -t(2A0 + A1 t - A3 t^3)/(4 K(t)^2).
LocusCurve torus_locus_closed_form(const std::array<Scalar, 4>& A);

struct CuspReport {
    /// Real parameters with s' = alpha' = 0, increasing.
    std::vector<double> t;
    /// Degree of gcd of the derivative numerators: the number of complex cusps with multiplicity.
    int complex_count = 0;
    UniPoly common_factor;
};

CuspReport find_cusps(const LocusCurve& c, double t_lo, double t_hi, double tol = 1e-12);

struct DoublePoint {
    double t1 = 0, t2 = 0;
    double s = 0, alpha_product = 0;
};

struct DoublePointReport {
    /// Real pairs t1 < t2 with equal images.
    std::vector<DoublePoint> real;
    /// Unordered pairs {t1, t2} over the complex numbers (real ones included).
    int complex_pairs = 0;
};

DoublePointReport find_double_points(const LocusCurve& c, double tol = 1e-12);

struct PlotWindow {
    std::string name;
    /// Parameter ranges sampled independently; each starts a new segment.
    std::vector<std::pair<double, double>> t_ranges;
    std::pair<double, double> s_range;
    std::pair<double, double> alpha_range;
    int samples = 400;
    /// Parameters where a segment is split.
    std::vector<double> splits;
    /// Parameters sampled in addition to the uniform grid.
    std::vector<double> marked;
};

struct PlotRow {
    double t = 0, s = 0, alpha_product = 0;
    int segment = 0;
};

/// The main and zoomed windows of the torus-example plot.
std::vector<PlotWindow> default_plot_windows();

/// Samples the curve, splitting segments at poles, splits and window exits.
std::vector<PlotRow> emit_plot(const LocusCurve& c, const PlotWindow& window);
std::string plot_csv(const std::vector<PlotRow>& rows);

}  // namespace nodal
