#include <algorithm>
#include <random>
#include <stdexcept>

#include "nodal/linalg.hpp"
#include "nodal/singular.hpp"

namespace nodal {

namespace {

Vector linear_coeffs(const MultiPoly& L, const char* who) {
    int deg = 0;
    if (L.is_zero() || !L.is_homogeneous_in(x_coords(), &deg) || deg != 1 || L.used_variables().size() > 4) {
        throw std::invalid_argument(std::string(who) + ": expected a linear form in x0..x3");
    }
    const MultiPoly M = L.with_variables(x_coords());
    Vector c(4);
    for (std::size_t i = 0; i < 4; ++i) {
        Exponent e(4, 0);
        e[i] = 1;
        c[i] = M.coefficient(e);
    }
    return c;
}

struct LineHits {
    std::vector<Vector> exact;
    std::vector<ComplexPoint> numeric;
    bool tangent = false;
};

Vector combine(const Scalar& a, const Vector& u, const Scalar& b, const Vector& v) {
    Vector w(4);
    for (std::size_t i = 0; i < 4; ++i) w[i] = a * u[i] + b * v[i];
    return w;
}

/// Zeros of the quadratic form G on the line spanned by u and v.
LineHits line_quadric(const Vector& u, const Vector& v, const MultiPoly& G, const std::string& who) {
    const MultiPoly g = G.with_variables(x_coords());
    const Scalar A = evaluate(g, u), C = evaluate(g, v);
    const Scalar B = evaluate(g, combine(1, u, 1, v)) - A - C;
    if (A.is_zero() && B.is_zero() && C.is_zero()) {
        throw std::invalid_argument(who + ": line contained in the quadric (non-isolated singularities)");
    }
    LineHits h;
    const Scalar disc = B * B - Scalar(4) * A * C;
    Scalar r;
    if (disc.is_zero()) {
        h.tangent = true;
        const Vector p = A.is_zero() ? u : combine(-B, u, Scalar(2) * A, v);
        h.exact = {p, p};
    } else if (exact_sqrt(disc, r)) {
        if (A.is_zero()) {
            h.exact = {u, combine(-C, u, B, v)};
        } else {
            h.exact = {combine(-B + r, u, Scalar(2) * A, v), combine(-B - r, u, Scalar(2) * A, v)};
        }
    } else {
        const long double d = disc.to_long_double();
        const std::complex<long double> sq = d >= 0 ? std::complex<long double>(std::sqrt(d), 0)
                                                    : std::complex<long double>(0, std::sqrt(-d));
        for (int sgn : {1, -1}) {
            const std::complex<long double> lam =
                (-B.to_long_double() + static_cast<long double>(sgn) * sq) / (2 * A.to_long_double());
            ComplexPoint p{};
            for (std::size_t i = 0; i < 4; ++i) {
                const std::complex<long double> c = lam * u[i].to_long_double() + v[i].to_long_double();
                p[i] = std::complex<double>(static_cast<double>(c.real()), static_cast<double>(c.imag()));
            }
            h.numeric.push_back(normalize_point(p));
        }
    }
    return h;
}

std::vector<Vector> line_basis(const Vector& a, const Vector& b, const std::string& who) {
    const auto basis = nullspace(Matrix{a, b}, 4);
    if (basis.size() != 2) throw std::invalid_argument(who + ": planes are not independent");
    return basis;
}

void append_hits(std::vector<SingularPointRecord>& out, const LineHits& h, const MultiPoly& F,
                 const std::string& origin) {
    for (const auto& p : h.exact) {
        auto rec = verify_singular(F, p);
        rec.origin = origin + (h.tangent ? " (tangent)" : "");
        out.push_back(std::move(rec));
    }
    for (const auto& p : h.numeric) {
        auto rec = verify_singular_numeric(F, p);
        rec.conjugate_pair = true;
        rec.origin = origin;
        out.push_back(std::move(rec));
    }
}

}  // namespace

std::vector<SingularPointRecord> structural_nodes_tetrahedral(const MultiPoly& Q, const std::array<MultiPoly, 4>& L,
                                                              const Scalar& scale) {
    std::array<Vector, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = linear_coeffs(L[i], "structural_nodes_tetrahedral");
    const MultiPoly F = Q * Q - scale * L[0] * L[1] * L[2] * L[3];
    std::vector<SingularPointRecord> out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const std::string origin = "edge L" + std::to_string(i + 1) + "=L" + std::to_string(j + 1);
            const auto basis = line_basis(c[i], c[j], "structural_nodes_tetrahedral: " + origin);
            append_hits(out, line_quadric(basis[0], basis[1], Q, "structural_nodes_tetrahedral: " + origin), F,
                        origin);
        }
    }
    return out;
}

MultiPoly trope_quartic(const Tropes& t) {
    const MultiPoly X = t.x1 * t.x2, Y = t.y1 * t.y2, Z = t.z1 * t.z2;
    return X * X + Y * Y + Z * Z - 2 * Y * Z - 2 * X * Z - 2 * X * Y;
}

Tropes fourteen_nodal_tropes(const FourteenNodalFamily& f) {
    const Scalar c = f.factor;
    const Scalar aa = f.params.alpha1 * f.params.alpha2;
    return Tropes{c * c * aa * f.params.K1, f.params.K2, f.L0, f.L3, f.L1, f.L2};
}

std::vector<SingularPointRecord> structural_nodes_fourteen(const Tropes& t, const std::optional<MultiPoly>& quartic) {
    const char* who = "structural_nodes_fourteen";
    const std::array<MultiPoly, 2> xs{t.x1, t.x2}, ys{t.y1, t.y2}, zs{t.z1, t.z2};
    const MultiPoly F = quartic ? *quartic : trope_quartic(t);
    std::vector<SingularPointRecord> out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const auto basis =
                    nullspace(Matrix{linear_coeffs(xs[i], who), linear_coeffs(ys[j], who), linear_coeffs(zs[k], who)},
                              4);
                if (basis.size() != 1) throw std::invalid_argument("structural_nodes_fourteen: coincident planes");
                auto rec = verify_singular(F, basis[0]);
                rec.origin = "trope x" + std::to_string(i + 1) + "=y" + std::to_string(j + 1) + "=z" +
                             std::to_string(k + 1) + "=0";
                out.push_back(std::move(rec));
            }
        }
    }
    struct Pair {
        const MultiPoly *a, *b;
        MultiPoly quadric;
        std::string origin;
    };
    const std::array<Pair, 3> pairs{Pair{&t.x1, &t.x2, t.y1 * t.y2 - t.z1 * t.z2, "x1=x2=y1y2-z1z2=0"},
                                    Pair{&t.y1, &t.y2, t.x1 * t.x2 - t.z1 * t.z2, "y1=y2=x1x2-z1z2=0"},
                                    Pair{&t.z1, &t.z2, t.x1 * t.x2 - t.y1 * t.y2, "z1=z2=x1x2-y1y2=0"}};
    for (const auto& p : pairs) {
        std::vector<Vector> basis;
        try {
            basis = line_basis(linear_coeffs(*p.a, who), linear_coeffs(*p.b, who), who);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("structural_nodes_fourteen: coincident planes");
        }
        append_hits(out, line_quadric(basis[0], basis[1], p.quadric, std::string(who) + ": " + p.origin), F,
                    p.origin);
    }
    return out;
}

namespace {

RulingPoint sample_ruling(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    auto pick = [&] { return Scalar(num(rng), den(rng)); };
    RulingPoint p{pick(), pick(), pick(), pick()};
    if (p.a0.is_zero() && p.a1.is_zero()) p.a0 = 1;
    if (p.b0.is_zero() && p.b1.is_zero()) p.b0 = 1;
    return p;
}

MultiPoly leading_normalized(const MultiPoly& p) { return p / p.leading_coefficient(); }

}  // namespace

FamilySingularReport family_singular_locus(const DeformationSpec& spec, const std::vector<MultiPoly>& planes,
                                           std::uint64_t seed) {
    if (!spec.alpha1.is_constant() || !spec.alpha2.is_constant()) {
        throw std::invalid_argument("family_singular_locus: alpha1, alpha2 must be constants");
    }
    const Scalar a1 = spec.alpha1.constant_term(), a2 = spec.alpha2.constant_term();
    FamilySingularReport rep;

    std::mt19937_64 rng(seed);
    auto sample = [&](const std::vector<Scalar>& y, const std::string& what) {
        rep.nonisolated_components.push_back(what);
        for (int k = 0; k < 5; ++k) {
            FamilyLocusPoint p;
            p.x = segre_point(sample_ruling(rng));
            p.y = y;
            p.origin = what;
            p.check = verify_family_singular(spec, p.x, p.y);
            rep.nonisolated_samples.push_back(std::move(p));
        }
    };
    if (a1.is_zero()) sample({0, 0, 1}, "y0=y1=0 over Q=0");
    if (a2.is_zero()) sample({0, 1, 0}, "y0=y2=0 over Q=0");

    if (!planes.empty()) {
        MultiPoly prod(1);
        for (const auto& p : planes) prod *= p;
        if (spec.Phi.is_zero() || !(leading_normalized(prod) == leading_normalized(spec.Phi))) {
            throw std::invalid_argument("family_singular_locus: planes do not multiply to Phi");
        }
        std::vector<Vector> c;
        for (const auto& p : planes) c.push_back(linear_coeffs(p, "family_singular_locus"));
        const MultiPoly Qx = spec.Q.with_variables(x_coords());

        auto y_for = [&](const Vector& x) -> std::optional<std::vector<Scalar>> {
            Vector dq, dphi;
            for (const auto& v : x_coords()) {
                dq.push_back(evaluate(differentiate(Qx, v), x));
                dphi.push_back(evaluate(differentiate(spec.Phi.with_variables(x_coords()), v), x));
            }
            if (is_zero_vector(dphi)) return std::vector<Scalar>{1, 0, 0};
            if (!proportional(dq, dphi) || is_zero_vector(dq)) return std::nullopt;
            std::size_t k = 0;
            while (dq[k].is_zero()) ++k;
            const Scalar mu = dphi[k] / dq[k];
            if (!(a1 * a2).is_zero()) return std::nullopt;
            return std::vector<Scalar>{1, mu * a1, mu * a2};
        };
        auto add_exact = [&](const Vector& x0, const std::string& origin) {
            const Vector x = normalize_projective(x0);
            const auto y = y_for(x);
            if (!y) return;
            FamilyLocusPoint p;
            p.x = x;
            p.y = *y;
            p.origin = origin;
            p.check = verify_family_singular(spec, p.x, p.y);
            const bool dup = std::any_of(rep.isolated.begin(), rep.isolated.end(),
                                         [&](const FamilyLocusPoint& q) { return q.x == p.x; });
            if (!dup) rep.isolated.push_back(std::move(p));
        };

        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                const std::string origin = "planes " + std::to_string(i + 1) + "," + std::to_string(j + 1);
                const auto basis = line_basis(c[i], c[j], "family_singular_locus: " + origin);
                const auto hits = line_quadric(basis[0], basis[1], Qx, "family_singular_locus: " + origin);
                for (const auto& x : hits.exact) add_exact(x, origin);
                for (const auto& x : hits.numeric) {
                    SingularPointRecord r;
                    r.approx = x;
                    r.conjugate_pair = true;
                    r.origin = origin;
                    rep.isolated_numeric.push_back(r);
                }
            }
        }
        if (Qx == quadric()) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                const Vector& l = c[i];
                if (!(l[0] * l[3] - l[1] * l[2]).is_zero()) continue;
                add_exact(Vector{l[3], -l[2], -l[1], l[0]}, "tangency of plane " + std::to_string(i + 1));
            }
        }
    }

    if (a1.is_zero() && !a2.is_zero() && spec.Q == quadric()) {
        NormalForm nf;
        const MultiPoly u0 = MultiPoly::variable("u0"), x1 = MultiPoly::variable("x1"),
                        x2 = MultiPoly::variable("x2"), y1 = MultiPoly::variable("y1"),
                        y2 = MultiPoly::variable("y2");
        const MultiPoly phi_t = substitute(spec.Phi, {{"x0", u0 + x1 * x2}, {"x3", MultiPoly(1)}});
        nf.phi = substitute(phi_t, {{"u0", MultiPoly(0)}});
        nf.psi = divide_exact(phi_t - nf.phi, u0);
        nf.normal_form = y1 * (y2 - a2 * substitute(nf.psi, {{"u0", a2 * y1}})) - nf.phi;
        nf.residual = substitute(y1 * y2 - phi_t, {{"u0", a2 * y1}}) - nf.normal_form;
        rep.normal_form = std::move(nf);
    }
    return rep;
}

}  // namespace nodal
