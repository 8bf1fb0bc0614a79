#include "nodal/dualcurve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "nodal/families.hpp"

namespace nodal {

namespace {

using lcplx = std::complex<long double>;

const MultiPoly& X0() {
    static const MultiPoly v = MultiPoly::variable("x0");
    return v;
}
const MultiPoly& X3() {
    static const MultiPoly v = MultiPoly::variable("x3");
    return v;
}

bool numeric_in_x03(const MultiPoly& p) {
    for (const auto& v : p.used_variables()) {
        if (v != "x0" && v != "x3") return false;
    }
    return true;
}

/// Largest monomial x0^a x3^b dividing every component.
void remove_monomial_factor(std::array<MultiPoly, 3>& c) {
    std::uint32_t e0 = UINT32_MAX, e3 = UINT32_MAX;
    for (const auto& p : c) {
        if (p.is_zero()) continue;
        const auto i0 = p.index_of("x0"), i3 = p.index_of("x3");
        for (const auto& [e, coef] : p.terms()) {
            e0 = std::min(e0, i0 ? e[*i0] : 0u);
            e3 = std::min(e3, i3 ? e[*i3] : 0u);
        }
    }
    if (e0 == UINT32_MAX) return;
    const MultiPoly m = X0().pow(e0) * X3().pow(e3);
    if (m.is_constant()) return;
    for (auto& p : c) p = divide_exact(p, m);
}

/// Removes the gcd of components that are binary forms with rational coefficients.
void remove_binary_gcd(std::array<MultiPoly, 3>& c) {
    UniPoly g;
    for (const auto& p : c) {
        if (p.is_zero()) continue;
        const UniPoly u = UniPoly::from_multipoly(substitute(p, {{"x3", MultiPoly(1)}}), "x0");
        g = gcd(g, u);
    }
    if (g.degree() <= 0) return;
    // G(x0, x3) = x3^deg g(x0 / x3)
    MultiPoly G(0);
    const int d = g.degree();
    for (int k = 0; k <= d; ++k) G += g.coeff(static_cast<std::size_t>(k)) * X0().pow(k) * X3().pow(d - k);
    for (auto& p : c) p = divide_exact(p, G);
}

void normalize_content(std::array<MultiPoly, 3>& c) {
    mpz_class num = 0, den = 1;
    for (const auto& p : c) {
        for (const auto& [e, coef] : p.terms()) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), coef.numerator().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coef.denominator().get_mpz_t());
        }
    }
    if (num == 0) throw std::invalid_argument("plane curve: zero curve");
    Scalar content{mpq_class(num, den)};
    const auto first = std::find_if(c.begin(), c.end(), [](const MultiPoly& p) { return !p.is_zero(); });
    if (first->leading_coefficient().sign() < 0) content = -content;
    for (auto& p : c) p /= content;
}

PlaneCurveParam reduce(std::array<MultiPoly, 3> c) {
    if (std::all_of(c.begin(), c.end(), [](const MultiPoly& p) { return p.is_zero(); })) {
        throw std::invalid_argument("plane curve: zero curve");
    }
    remove_monomial_factor(c);
    if (std::all_of(c.begin(), c.end(), numeric_in_x03)) remove_binary_gcd(c);
    normalize_content(c);
    return PlaneCurveParam{c};
}

std::array<MultiPoly, 3> cross(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

UniPoly affine_of(const MultiPoly& p) {
    return UniPoly::from_multipoly(substitute(p, {{"x0", MultiPoly::variable("t")}, {"x3", MultiPoly(1)}}), "t");
}

}  // namespace

std::array<UniPoly, 3> PlaneCurveParam::affine() const {
    return {affine_of(components[0]), affine_of(components[1]), affine_of(components[2])};
}

bool projectively_equal(const PlaneCurveParam& a, const PlaneCurveParam& b) {
    std::size_t i = 0;
    while (i < 3 && a.components[i].is_zero()) ++i;
    if (i == 3 || b.components[i].is_zero()) return false;
    const MultiPoly& ai = a.components[i];
    const MultiPoly& bi = b.components[i];
    if (!(ai * bi.leading_coefficient() == bi * ai.leading_coefficient())) return false;
    for (std::size_t j = 0; j < 3; ++j) {
        if (!(a.components[j] * bi == b.components[j] * ai)) return false;
    }
    return true;
}

std::array<MultiPoly, 4> coefficient_polys(const std::array<Scalar, 4>& A) {
    return {MultiPoly(A[0]), MultiPoly(A[1]), MultiPoly(A[2]), MultiPoly(A[3])};
}

std::array<MultiPoly, 4> symbolic_coefficients() {
    return {MultiPoly::variable("A0"), MultiPoly::variable("A1"), MultiPoly::variable("A2"),
            MultiPoly::variable("A3")};
}

BinaryForm multiple_root_form(const std::array<Scalar, 4>& A, const Scalar& beta, const Scalar& s) {
    const MultiPoly f = beta * X0().pow(2) * X3().pow(2) + 4 * torus_cubic(A) * (X0() + s * X3());
    return BinaryForm::from_multipoly(f.with_variables({"x0", "x3"}), "x0", "x3");
}

Scalar multiple_root_condition(const std::array<Scalar, 4>& A, const Scalar& beta, const Scalar& s) {
    const BinaryForm f = multiple_root_form(A, beta, s);
    if (f.is_zero()) return Scalar(0);
    return discriminant_binary(f);
}

PlaneCurveParam dual_quartic_param(const std::array<MultiPoly, 4>& A) {
    const MultiPoly K = torus_cubic(A);
    if (K.is_zero()) throw std::invalid_argument("dual_quartic_param: K = 0");
    return reduce({X0().pow(2) * X3().pow(2), X0() * K, X3() * K});
}

PlaneCurveParam dual_quartic_param(const std::array<Scalar, 4>& A) { return dual_quartic_param(coefficient_polys(A)); }

PlaneCurveParam dual_curve_param(const std::array<MultiPoly, 4>& A) {
    const MultiPoly K = torus_cubic(A);
    if (K.is_zero()) throw std::invalid_argument("dual_curve_param: K = 0 (zero curve)");
    const std::array<MultiPoly, 3> psi{X0().pow(2) * X3().pow(2), X0() * K, X3() * K};
    std::array<MultiPoly, 3> d0, d3;
    for (std::size_t i = 0; i < 3; ++i) {
        d0[i] = differentiate(psi[i], "x0");
        d3[i] = differentiate(psi[i], "x3");
    }
    const auto u = cross(d0, d3);
    return reduce({4 * u[0], u[2], u[1]});
}

PlaneCurveParam dual_curve_param(const std::array<Scalar, 4>& A) { return dual_curve_param(coefficient_polys(A)); }

PlaneCurveParam dual_curve_closed_form(const std::array<MultiPoly, 4>& A) {
    const MultiPoly K = torus_cubic(A);
    const MultiPoly K0 = differentiate(K, "x0"), K3 = differentiate(K, "x3");
    return PlaneCurveParam{{-4 * K * K, X0().pow(2) * X3() * (2 * K - X3() * K3),
                            X0() * X3().pow(2) * (2 * K - X0() * K0)}};
}

LocusCurve torus_locus(const std::array<Scalar, 4>& A) {
    const auto c = dual_curve_param(A).affine();
    if (c[2].is_zero()) throw std::invalid_argument("torus_locus: denominator 2A0 + A1 t - A3 t^3 is identically zero");
    if (c[0].is_zero()) throw std::invalid_argument("torus_locus: K is identically zero");
    return LocusCurve{RationalFunction(c[1], c[2]), RationalFunction(c[2], c[0])};
}

LocusCurve torus_locus_closed_form(const std::array<Scalar, 4>& A) {
    const UniPoly t = UniPoly::t();
    const UniPoly K{A[0], A[1], A[2], A[3]};
    const UniPoly den{Scalar(2) * A[0], A[1], 0, -A[3]};
    const UniPoly snum = -(t * UniPoly{A[0], 0, -A[2], Scalar(-2) * A[3]});
    if (den.is_zero() || K.is_zero()) throw std::invalid_argument("torus_locus: zero denominator");
    return LocusCurve{RationalFunction(snum, den), RationalFunction(-(t * den), Scalar(4) * K * K)};
}

CuspReport find_cusps(const LocusCurve& c, double t_lo, double t_hi, double tol) {
    const UniPoly ns = c.s.derivative().numerator();
    const UniPoly na = c.alpha_product.derivative().numerator();
    CuspReport r;
    r.common_factor = gcd(ns, na);
    if (r.common_factor.is_zero()) throw std::invalid_argument("find_cusps: constant curve");
    r.complex_count = r.common_factor.degree();
    if (r.complex_count <= 0) return r;
    for (const long double x : real_roots(r.common_factor, Scalar(mpq_class(t_lo)), Scalar(mpq_class(t_hi)), tol)) {
        r.t.push_back(static_cast<double>(x));
    }
    return r;
}

namespace {

std::vector<lcplx> roots_complex_coeffs(std::vector<lcplx> c) {
    while (!c.empty() && std::abs(c.back()) == 0) c.pop_back();
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<lcplx> out;
    if (d <= 0) return out;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) {
        const lcplx v = -c[static_cast<std::size_t>(i)] / c.back();
        comp(i, d - 1) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    auto eval = [&](lcplx z, bool deriv) {
        lcplx acc = 0;
        for (int k = d; k >= (deriv ? 1 : 0); --k) {
            acc = acc * z + (deriv ? static_cast<long double>(k) * c[static_cast<std::size_t>(k)]
                                   : c[static_cast<std::size_t>(k)]);
        }
        return acc;
    };
    for (int i = 0; i < d; ++i) {
        lcplx z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
        for (int it = 0; it < 10; ++it) {
            const lcplx dz = eval(z, true);
            if (std::abs(dz) == 0) break;
            z -= eval(z, false) / dz;
        }
        out.push_back(z);
    }
    return out;
}

struct Bivariate {
    std::vector<UniPoly> by_v;  // coefficient of v^k as a polynomial in u

    explicit Bivariate(const MultiPoly& p) {
        for (const auto& ck : p.coefficients_in("v")) by_v.push_back(UniPoly::from_multipoly(ck, "u"));
    }
    [[nodiscard]] std::vector<lcplx> at(lcplx u) const {
        std::vector<lcplx> c;
        for (const auto& q : by_v) c.push_back(q.eval(u));
        return c;
    }
};

lcplx eval_coeffs(const std::vector<lcplx>& c, lcplx v) {
    lcplx acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
    return acc;
}

long double coeff_norm(const std::vector<lcplx>& c, lcplx v) {
    long double n = 0, p = 1;
    for (const auto& x : c) {
        n += std::abs(x) * p;
        p *= std::max<long double>(1, std::abs(v));
    }
    return n;
}

MultiPoly cross_difference(const RationalFunction& f) {
    const MultiPoly N_u = f.numerator().to_multipoly("u"), N_v = f.numerator().to_multipoly("v");
    const MultiPoly D_u = f.denominator().to_multipoly("u"), D_v = f.denominator().to_multipoly("v");
    const MultiPoly diff = N_u * D_v - N_v * D_u;
    return divide_exact(diff, MultiPoly::variable("u") - MultiPoly::variable("v"));
}

/// Newton on s(t1) = s(t2), a(t1) = a(t2).
bool refine_pair(const LocusCurve& c, lcplx& t1, lcplx& t2) {
    const RationalFunction ds = c.s.derivative(), da = c.alpha_product.derivative();
    auto ev = [](const RationalFunction& f, lcplx t) { return f.numerator().eval(t) / f.denominator().eval(t); };
    for (int it = 0; it < 60; ++it) {
        const lcplx f1 = ev(c.s, t1) - ev(c.s, t2), f2 = ev(c.alpha_product, t1) - ev(c.alpha_product, t2);
        const lcplx a = ev(ds, t1), b = -ev(ds, t2), cc = ev(da, t1), d = -ev(da, t2);
        const lcplx det = a * d - b * cc;
        if (std::abs(det) == 0) return false;
        const lcplx d1 = (d * f1 - b * f2) / det, d2 = (a * f2 - cc * f1) / det;
        t1 -= d1;
        t2 -= d2;
        if (std::abs(d1) + std::abs(d2) < 1e-17L * (1 + std::abs(t1) + std::abs(t2))) break;
    }
    const lcplx r1 = ev(c.s, t1) - ev(c.s, t2), r2 = ev(c.alpha_product, t1) - ev(c.alpha_product, t2);
    return std::abs(r1) + std::abs(r2) < 1e-10L * (1 + std::abs(ev(c.s, t1)) + std::abs(ev(c.alpha_product, t1)));
}

}  // namespace

DoublePointReport find_double_points(const LocusCurve& c, double tol) {
    const MultiPoly P1 = cross_difference(c.s), P2 = cross_difference(c.alpha_product);
    DoublePointReport rep;
    if (P1.is_zero() || P2.is_zero()) return rep;
    const MultiPoly Rm = resultant(P1, P2, "v");
    if (Rm.is_zero()) throw std::invalid_argument("find_double_points: resultant vanishes (multiply covered curve)");
    const UniPoly R = UniPoly::from_multipoly(Rm, "u");
    if (R.degree() <= 0) return rep;
    const UniPoly Rs = squarefree_part(R);
    const Bivariate B1(P1), B2(P2);
    const UniPoly& D1 = c.s.denominator();
    const UniPoly& D2 = c.alpha_product.denominator();

    // Refined pairs (t1, t2) with distinct parameters and finite image.
    auto partners = [&](lcplx u) {
        std::vector<std::pair<lcplx, lcplx>> out;
        const auto c1 = B1.at(u), c2 = B2.at(u);
        auto distinct = [](lcplx a, lcplx b) { return std::abs(a - b) > 1e-5L * (1 + std::abs(a)); };
        for (lcplx v : roots_complex_coeffs(c1)) {
            if (std::abs(eval_coeffs(c2, v)) > 1e-6L * coeff_norm(c2, v)) continue;
            if (!distinct(u, v)) continue;
            lcplx t1 = u, t2 = v;
            if (!refine_pair(c, t1, t2) || !distinct(t1, t2)) continue;
            const bool pole = std::abs(D1.eval(t1)) < 1e-12L || std::abs(D2.eval(t1)) < 1e-12L ||
                              std::abs(D1.eval(t2)) < 1e-12L || std::abs(D2.eval(t2)) < 1e-12L;
            if (!pole) out.emplace_back(t1, t2);
        }
        return out;
    };
    auto same = [](const std::pair<lcplx, lcplx>& p, const std::pair<lcplx, lcplx>& q) {
        return (std::abs(p.first - q.first) < 1e-7L && std::abs(p.second - q.second) < 1e-7L) ||
               (std::abs(p.first - q.second) < 1e-7L && std::abs(p.second - q.first) < 1e-7L);
    };

    // Complex census: each unordered pair arises from both of its parameters.
    std::vector<std::pair<lcplx, lcplx>> pairs;
    for (const lcplx u : complex_roots(Rs)) {
        for (const auto& p : partners(u)) {
            if (std::none_of(pairs.begin(), pairs.end(), [&](const auto& q) { return same(p, q); })) pairs.push_back(p);
        }
    }
    rep.complex_pairs = static_cast<int>(pairs.size());

    for (const long double u0 : real_roots(Rs, tol)) {
        for (const auto& [t1, t2] : partners(lcplx(u0, 0))) {
            if (std::abs(t1.imag()) > 1e-9L || std::abs(t2.imag()) > 1e-9L) continue;
            DoublePoint dp;
            dp.t1 = static_cast<double>(std::min(t1.real(), t2.real()));
            dp.t2 = static_cast<double>(std::max(t1.real(), t2.real()));
            const bool dup = std::any_of(rep.real.begin(), rep.real.end(), [&](const DoublePoint& q) {
                return std::abs(q.t1 - dp.t1) < 1e-7 && std::abs(q.t2 - dp.t2) < 1e-7;
            });
            if (dup) continue;
            dp.s = static_cast<double>(c.s.eval(t1.real()));
            dp.alpha_product = static_cast<double>(c.alpha_product.eval(t1.real()));
            rep.real.push_back(dp);
        }
    }
    std::sort(rep.real.begin(), rep.real.end(), [](const DoublePoint& a, const DoublePoint& b) { return a.t1 < b.t1; });
    return rep;
}

std::vector<PlotWindow> default_plot_windows() {
    const double r = std::sqrt(97.0);
    PlotWindow main;
    main.name = "main";
    main.t_ranges = {{-4.1, -2.25}, {-1.76, -1.48}, {-1.44, -1.24}, {-0.76, -0.65}, {-0.646, -0.58}, {-0.416, 1.52}};
    main.s_range = {-3.5, 5.3};
    main.alpha_range = {-4.2, 7.7};
    main.marked = {(-15 - r) / 16, (-15 + r) / 16};
    PlotWindow zoom;
    zoom.name = "zoom";
    zoom.t_ranges = {{-0.19, 0.75}};
    zoom.s_range = {-0.07, 0.33};
    zoom.alpha_range = {-0.08, 0.34};
    zoom.splits = {0.0};
    return {main, zoom};
}

std::vector<PlotRow> emit_plot(const LocusCurve& c, const PlotWindow& w) {
    if (w.samples < 2) throw std::invalid_argument("emit_plot: at least two samples");
    std::vector<long double> poles = real_roots(c.s.denominator());
    for (const long double p : real_roots(c.alpha_product.denominator())) poles.push_back(p);

    std::vector<PlotRow> rows;
    int segment = -1;
    for (const auto& [lo, hi] : w.t_ranges) {
        std::vector<double> cuts{lo};
        for (const double sp : w.splits) {
            if (sp > lo && sp < hi) cuts.push_back(sp);
        }
        cuts.push_back(hi);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const double a = cuts[k], b = cuts[k + 1];
            std::vector<double> ts;
            for (int i = 0; i < w.samples; ++i) ts.push_back(a + (b - a) * i / (w.samples - 1));
            for (const double m : w.marked) {
                if (m >= a && m <= b) ts.push_back(m);
            }
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            bool open = false;
            double prev = a;
            for (const double t : ts) {
                const bool pole_between = std::any_of(poles.begin(), poles.end(), [&](long double p) {
                    return p > prev && p <= t;
                });
                prev = t;
                if (pole_between) open = false;
                if (std::abs(c.s.denominator().eval(t)) == 0 || std::abs(c.alpha_product.denominator().eval(t)) == 0) {
                    open = false;
                    continue;
                }
                const double s = static_cast<double>(c.s.eval(t));
                const double al = static_cast<double>(c.alpha_product.eval(t));
                const bool inside = std::isfinite(s) && std::isfinite(al) && s >= w.s_range.first &&
                                    s <= w.s_range.second && al >= w.alpha_range.first && al <= w.alpha_range.second;
                if (!inside) {
                    open = false;
                    continue;
                }
                if (!open) {
                    ++segment;
                    open = true;
                }
                rows.push_back(PlotRow{t, s, al, segment});
            }
        }
    }
    return rows;
}

std::string plot_csv(const std::vector<PlotRow>& rows) {
    std::ostringstream os;
    os << "t,s,alpha_product,segment_id\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%d\n", r.t, r.s, r.alpha_product, r.segment);
        os << buf;
    }
    return os.str();
}

}  // namespace nodal
