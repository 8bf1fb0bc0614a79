#include "nodal/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal {

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

int x_degree(const MultiPoly& p, const char* what) {
    int d = -1;
    if (!p.is_homogeneous_in(x_coords(), &d)) {
        throw std::invalid_argument(std::string(what) + " is not homogeneous in x0..x3");
    }
    return d;
}

}  // namespace

const std::vector<std::string>& x_coords() {
    static const std::vector<std::string> v{"x0", "x1", "x2", "x3"};
    return v;
}

const std::vector<std::string>& y_coords() {
    static const std::vector<std::string> v{"y0", "y1", "y2"};
    return v;
}

const std::vector<std::string>& w_coords() {
    static const std::vector<std::string> v{"w0", "w1", "w2"};
    return v;
}

const std::vector<std::string>& ruling_coords() {
    static const std::vector<std::string> v{"s0", "s1", "t0", "t1"};
    return v;
}

MultiPoly quadric() { return MultiPoly::parse("x0*x3 - x1*x2", x_coords()); }

QuadricContext quadric_context() {
    QuadricContext ctx;
    ctx.Q = quadric();
    ctx.segre = {{"x0", var("s0") * var("t0")},
                 {"x1", var("s0") * var("t1")},
                 {"x2", var("s1") * var("t0")},
                 {"x3", var("s1") * var("t1")}};
    return ctx;
}

std::vector<Scalar> segre_point(const RulingPoint& p) {
    return {p.a0 * p.b0, p.a0 * p.b1, p.a1 * p.b0, p.a1 * p.b1};
}

RulingPoint ruling_point(const std::vector<Scalar>& x) {
    if (x.size() != 4) throw std::invalid_argument("ruling_point: expected 4 coordinates");
    if (x[0] * x[3] != x[1] * x[2]) throw std::invalid_argument("ruling_point: point is not on Q");
    // Rows (x0, x1) and (x2, x3) are proportional to (b0, b1), columns to (a0, a1).
    RulingPoint p;
    if (!x[0].is_zero() || !x[1].is_zero()) {
        p.b0 = x[0];
        p.b1 = x[1];
    } else if (!x[2].is_zero() || !x[3].is_zero()) {
        p.b0 = x[2];
        p.b1 = x[3];
    } else {
        throw std::invalid_argument("ruling_point: zero vector");
    }
    if (!x[0].is_zero() || !x[2].is_zero()) {
        p.a0 = x[0];
        p.a1 = x[2];
    } else {
        p.a0 = x[1];
        p.a1 = x[3];
    }
    return p;
}

Grading ruling_grading() {
    return {{"s0", {1, 0}}, {"s1", {1, 0}}, {"t0", {0, 1}}, {"t1", {0, 1}}};
}

Grading ConicBundleSpec::grading() const {
    const int k = static_cast<int>(n);
    return {{"s0", {1, 0, 0}}, {"s1", {1, 0, 0}}, {"t0", {0, 1, 0}}, {"t1", {0, 1, 0}},
            {"w0", {0, 0, 1}}, {"w1", {k - 1, 1, 1}}, {"w2", {1, k - 1, 1}}};
}

ConicBundleSpec conic_bundle(unsigned n, const MultiPoly& phi, BundleSign sign) {
    if (n < 1) throw std::invalid_argument("conic_bundle: n must be at least 1");
    for (const auto& v : phi.used_variables()) {
        const auto& r = ruling_coords();
        if (std::find(r.begin(), r.end(), v) == r.end()) {
            throw std::invalid_argument("conic_bundle: phi involves '" + v + "' outside s0, s1, t0, t1");
        }
    }
    const auto deg = multidegree(phi, ruling_grading());
    const std::vector<int> want{static_cast<int>(n), static_cast<int>(n)};
    if (phi.is_zero() || !deg || *deg != want) {
        throw std::invalid_argument("conic_bundle: phi is not bihomogeneous of type (" + std::to_string(n) + "," +
                                    std::to_string(n) + ")");
    }
    ConicBundleSpec spec;
    spec.n = n;
    spec.phi = phi;
    spec.sign = sign;
    const MultiPoly w0 = var("w0");
    const MultiPoly fibre = var("w1") * var("w2");
    spec.equation = sign == BundleSign::Minus ? fibre - phi * w0 * w0 : fibre + phi * w0 * w0;
    return spec;
}

MultiPoly DeformationSpec::branch() const { return Q * Q - Scalar(4) * alpha1 * alpha2 * Phi; }

DeformationSpec deformation_from_phi(const MultiPoly& Phi, const MultiPoly& alpha1, const MultiPoly& alpha2,
                                     const MultiPoly& Q) {
    if (x_degree(Phi, "Phi") != 4 && !Phi.is_zero()) throw std::invalid_argument("Phi must have degree 4 in x");
    if (x_degree(Q, "Q") != 2) throw std::invalid_argument("Q must have degree 2 in x");
    DeformationSpec spec;
    spec.Q = Q;
    spec.alpha1 = alpha1;
    spec.alpha2 = alpha2;
    spec.Phi = Phi;
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    spec.first = y1 * y2 - Phi * y0 * y0;
    spec.second = alpha2 * y1 + alpha1 * y2 - Q * y0;
    return spec;
}

DeformationSpec deformation_family(const MultiPoly& K, const MultiPoly& L, const MultiPoly& alpha1,
                                   const MultiPoly& alpha2, const MultiPoly& Q) {
    if (x_degree(K, "K") != 3) throw std::invalid_argument("deformation_family: K must have degree 3");
    if (x_degree(L, "L") != 1) throw std::invalid_argument("deformation_family: L must have degree 1");
    DeformationSpec spec = deformation_from_phi(K * L, alpha1, alpha2, Q);
    spec.K = K;
    spec.L = L;
    return spec;
}

MultiPoly branch_quartic(const MultiPoly& K, const MultiPoly& L, const MultiPoly& alpha_product, const MultiPoly& Q) {
    return Q * Q - Scalar(4) * alpha_product * K * L;
}

MultiPoly tangent_plane(const MultiPoly& a0, const MultiPoly& a1, const MultiPoly& b0, const MultiPoly& b1) {
    if ((a0.is_zero() && a1.is_zero()) || (b0.is_zero() && b1.is_zero())) {
        throw std::invalid_argument("tangent_plane: ruling coordinates must not both vanish");
    }
    return a1 * b1 * var("x0") - a1 * b0 * var("x1") - a0 * b1 * var("x2") + a0 * b0 * var("x3");
}

MultiPoly tangent_plane(const RulingPoint& p) {
    const std::vector<Scalar> c{p.a1 * p.b1, -p.a1 * p.b0, -p.a0 * p.b1, p.a0 * p.b0};
    if ((p.a0.is_zero() && p.a1.is_zero()) || (p.b0.is_zero() && p.b1.is_zero())) {
        throw std::invalid_argument("tangent_plane: ruling coordinates must not both vanish");
    }
    return MultiPoly::linear(x_coords(), c);
}

std::array<MultiPoly, 4> fourteen_nodal_planes(const MultiPoly& a0, const MultiPoly& a1, const MultiPoly& b0,
                                               const MultiPoly& b1, const MultiPoly& lambda, const MultiPoly& mu) {
    const MultiPoly one(1);
    return {tangent_plane(one, lambda, one, mu), tangent_plane(one, lambda, b0, b1), tangent_plane(a0, a1, one, mu),
            tangent_plane(a0, a1, b0, b1)};
}

FourteenNodalFamily fourteen_nodal_family(const FourteenNodalParams& p) {
    const Scalar fa = p.a1 - p.lambda * p.a0;
    const Scalar fb = p.b1 - p.mu * p.b0;
    if (fa.is_zero()) {
        throw std::invalid_argument("fourteen_nodal_family: formula breaks down, a1 - lambda*a0 = 0");
    }
    if (fb.is_zero()) {
        throw std::invalid_argument("fourteen_nodal_family: formula breaks down, b1 - mu*b0 = 0");
    }
    if (x_degree(p.K1, "K1") != 1 || x_degree(p.K2, "K2") != 1) {
        throw std::invalid_argument("fourteen_nodal_family: K1 and K2 must be linear");
    }
    FourteenNodalFamily f;
    f.params = p;
    f.factor = fa * fb;
    const auto planes = fourteen_nodal_planes(p.a0, p.a1, p.b0, p.b1, p.lambda, p.mu);
    f.L0 = planes[0];
    f.L1 = planes[1];
    f.L2 = planes[2];
    f.L3 = planes[3];
    const Scalar aa = p.alpha1 * p.alpha2;
    f.Q = quadric() + f.factor * aa * p.K1 * p.K2;
    f.spec = deformation_family(p.K1 * p.K2 * f.L0, f.L3, p.alpha1, p.alpha2, f.Q);
    f.quartic = f.Q * f.Q - Scalar(4) * aa * p.K1 * p.K2 * f.L0 * f.L3;
    return f;
}

TorusParams TorusParams::from_factors(const std::array<Scalar, 3>& a, const std::array<Scalar, 3>& b) {
    TorusParams p;
    p.A = {b[0] * b[1] * b[2], a[0] * b[1] * b[2] + b[0] * a[1] * b[2] + b[0] * b[1] * a[2],
           a[0] * a[1] * b[2] + a[0] * b[1] * a[2] + b[0] * a[1] * a[2], a[0] * a[1] * a[2]};
    return p;
}

std::array<MultiPoly, 4> torus_coefficients(const std::array<MultiPoly, 3>& a, const std::array<MultiPoly, 3>& b) {
    return {b[0] * b[1] * b[2], a[0] * b[1] * b[2] + b[0] * a[1] * b[2] + b[0] * b[1] * a[2],
            a[0] * a[1] * b[2] + a[0] * b[1] * a[2] + b[0] * a[1] * a[2], a[0] * a[1] * a[2]};
}

MultiPoly torus_cubic(const std::array<MultiPoly, 4>& A) {
    const MultiPoly x0 = var("x0"), x3 = var("x3");
    return A[3] * x0.pow(3) + A[2] * x0 * x0 * x3 + A[1] * x0 * x3 * x3 + A[0] * x3.pow(3);
}

MultiPoly torus_cubic(const std::array<Scalar, 4>& A) {
    return torus_cubic(std::array<MultiPoly, 4>{A[0], A[1], A[2], A[3]}).with_variables(x_coords());
}

DeformationSpec torus_family(const TorusParams& p) {
    const MultiPoly K = torus_cubic(p.A);
    const MultiPoly L = MultiPoly::linear(x_coords(), std::vector<Scalar>{1, 0, 0, p.s});
    DeformationSpec spec = deformation_from_phi(-(K * L), p.alpha1, p.alpha2);
    spec.K = K;
    spec.L = L;
    return spec;
}

Scalar alpha_product_for_point(const MultiPoly& K, const std::vector<Scalar>& P) {
    const Scalar k = evaluate(K.with_variables(x_coords()), P);
    if (k.is_zero()) throw std::invalid_argument("alpha_product_for_point: K(P) = 0");
    return evaluate(quadric(), P) / (Scalar(2) * k);
}

MultiPoly l_from_point(const MultiPoly& K, const Scalar& alpha_product, const std::vector<Scalar>& P) {
    if (P.size() != 4) throw std::invalid_argument("l_from_point: P must have 4 coordinates");
    const MultiPoly Kx = K.with_variables(x_coords());
    const MultiPoly Q = quadric();
    const Scalar kp = evaluate(Kx, P);
    if (!alpha_product.is_zero() && kp.is_zero()) {
        throw std::invalid_argument("l_from_point: the formula does not work for P on K = 0");
    }
    if (evaluate(Q, P) != Scalar(2) * alpha_product * kp) {
        throw std::invalid_argument("l_from_point: P violates Q(P) = 2*aa*K(P)");
    }
    std::vector<Scalar> c;
    for (const auto& x : x_coords()) {
        c.push_back(evaluate(differentiate(Q, x), P) - alpha_product * evaluate(differentiate(Kx, x), P));
    }
    return MultiPoly::linear(x_coords(), c);
}

Substitution segre_parametrization() {
    const auto z = [](int i) { return var("z" + std::to_string(i)); };
    return {{"x", z(1) * (z(0) - z(2))},  {"y", z(2) * (z(0) - z(3))},  {"z", z(3) * (z(0) - z(1))},
            {"xp", z(2) * (z(1) - z(0))}, {"yp", z(3) * (z(2) - z(0))}, {"zp", z(1) * (z(3) - z(0))}};
}

Substitution igusa_parametrization() {
    const auto z = [](int i) { return var("z" + std::to_string(i)); };
    const MultiPoly a = (z(3) - z(1)) * z(2) * (z(0) - z(1)) * (z(0) - z(3));
    const MultiPoly ap = (z(1) - z(3)) * z(1) * z(3) * (z(0) - z(2));
    const Substitution cyc{{"z1", z(2)}, {"z2", z(3)}, {"z3", z(1)}};
    const MultiPoly b = substitute(a, cyc), bp = substitute(ap, cyc);
    const MultiPoly c = substitute(b, cyc), cp = substitute(bp, cyc);
    return {{"a", a}, {"b", b}, {"c", c}, {"ap", ap}, {"bp", bp}, {"cp", cp}};
}

namespace {

/// D^k f(N/D) where k is the degree of f in var.
MultiPoly substitute_fraction(const MultiPoly& f, const std::string& v, const MultiPoly& N, const MultiPoly& D) {
    const auto cs = f.coefficients_in(v);
    if (cs.empty()) return f;
    const std::size_t k = cs.size() - 1;
    MultiPoly out;
    for (std::size_t j = 0; j <= k; ++j) out += cs[j] * N.pow(static_cast<unsigned>(j)) * D.pow(static_cast<unsigned>(k - j));
    return out;
}

}  // namespace

KummerFamily kummer_family(const KummerParams& p) {
    const MultiPoly a = var("a"), b = var("b"), c = var("c"), ap = var("ap"), bp = var("bp");
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const MultiPoly aa = p.alpha1 * p.alpha2;
    const MultiPoly P = p.a0 * p.a1 * p.b0 * p.b1;
    KummerFamily f;
    f.c2 = p.a1 * p.b0 * a + p.a1 * p.b1 * b + (p.a1 * p.b0 + p.a1 * p.b1 - aa * P) * c +
           (p.a0 * p.b0 + p.a1 * p.b1 - aa * P) * ap + (p.a0 * p.b1 + p.a1 * p.b0 - aa * P) * bp;
    const MultiPoly cc2 = c * f.c2;
    const MultiPoly qslot = -(aa * cc2) + a * ap - b * bp;
    f.first = y1 * y2 + a * ap * cc2 * y0 * y0;
    f.second = p.alpha2 * y1 + p.alpha1 * y2 - qslot * y0;
    f.relation = a + b + c + ap + bp - aa * f.c2;
    f.branch = qslot * qslot + Scalar(4) * aa * a * ap * cc2;
    const auto rel = f.relation.coefficients_in("c");
    f.c_coefficient = rel.size() > 1 ? rel[1] : MultiPoly(0);
    f.c_numerator = rel.empty() ? MultiPoly(0) : -rel[0];
    if (p.eliminate_c) {
        if (f.c_coefficient.is_zero()) {
            throw std::invalid_argument("kummer_family: the coefficient of c in the linear relation vanishes");
        }
        const MultiPoly& D = f.c_coefficient;
        const MultiPoly& N = f.c_numerator;
        if (D.is_constant()) {
            const Substitution sub{{"c", N / D.constant_term()}};
            f.c2 = substitute(f.c2, sub);
            f.first = substitute(f.first, sub);
            f.second = substitute(f.second, sub);
            f.branch = substitute(f.branch, sub);
        } else {
            f.c2 = substitute_fraction(f.c2, "c", N, D);
            f.first = substitute_fraction(f.first, "c", N, D);
            f.second = substitute_fraction(f.second, "c", N, D);
            f.branch = substitute_fraction(f.branch, "c", N, D);
        }
        f.relation = MultiPoly(0);
    }
    return f;
}

}  // namespace nodal
