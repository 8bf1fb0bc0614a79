#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "compiled.hpp"
#include "nodal/linalg.hpp"
#include "nodal/singular.hpp"
#include "nodal/univariate.hpp"

namespace nodal {

namespace {

using detail::cplx;
using lcplx = std::complex<long double>;

enum class CompType { S, T, ST };

/// (1,0): a0 s0 + a1 s1; (0,1): a0 t0 + a1 t1; (1,1): sum C[i][j] s_i t_j.
struct Component {
    CompType type = CompType::ST;
    Vector a;
    Matrix C;
};

struct BPoint {
    bool exact = true;
    Vector s, t;
    std::array<cplx, 4> approx{};
};

std::array<cplx, 2> normalize_pair(cplx a, cplx b) {
    const cplx d = std::abs(a) >= std::abs(b) ? a : b;
    return {a / d, b / d};
}

std::array<cplx, 4> approx_of(const std::array<lcplx, 2>& s, const std::array<lcplx, 2>& t) {
    auto c = [](lcplx z) { return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag())); };
    const auto ns = normalize_pair(c(s[0]), c(s[1]));
    const auto nt = normalize_pair(c(t[0]), c(t[1]));
    return {ns[0], ns[1], nt[0], nt[1]};
}

BPoint exact_point(Vector s, Vector t) {
    BPoint p;
    p.s = normalize_projective(std::move(s));
    p.t = normalize_projective(std::move(t));
    p.approx = approx_of({p.s[0].to_long_double(), p.s[1].to_long_double()},
                         {p.t[0].to_long_double(), p.t[1].to_long_double()});
    return p;
}

bool same_point(const BPoint& a, const BPoint& b) {
    if (a.exact && b.exact) return proportional(a.s, b.s) && proportional(a.t, b.t);
    double d = 0;
    for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.approx[i] - b.approx[i]));
    return d < 1e-9;
}

Component parse_component(const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("discriminant_curve_nodes: zero factor");
    const MultiPoly g = f.with_variables(ruling_coords());
    const auto deg = multidegree(g, ruling_grading());
    if (!deg) throw std::invalid_argument("discriminant_curve_nodes: factor is not bihomogeneous");
    auto coef = [&](std::initializer_list<unsigned> e) { return g.coefficient(Exponent(e)); };
    Component c;
    if ((*deg)[0] == 1 && (*deg)[1] == 0) {
        c.type = CompType::S;
        c.a = {coef({1, 0, 0, 0}), coef({0, 1, 0, 0})};
    } else if ((*deg)[0] == 0 && (*deg)[1] == 1) {
        c.type = CompType::T;
        c.a = {coef({0, 0, 1, 0}), coef({0, 0, 0, 1})};
    } else if ((*deg)[0] == 1 && (*deg)[1] == 1) {
        c.C = {{coef({1, 0, 1, 0}), coef({1, 0, 0, 1})}, {coef({0, 1, 1, 0}), coef({0, 1, 0, 1})}};
    } else {
        throw std::invalid_argument("discriminant_curve_nodes: factors must have type (1,1), (1,0) or (0,1)");
    }
    return c;
}

/// A (1,1)-form of rank one splits as (a . s)(b . t).
std::vector<Component> split(const Component& c) {
    if (c.type != CompType::ST || !determinant(c.C).is_zero()) return {c};
    std::size_t r = c.C[0][0].is_zero() && c.C[0][1].is_zero() ? 1 : 0;
    const Vector b = c.C[r];
    std::size_t k = b[0].is_zero() ? 1 : 0;
    const Vector a{c.C[0][k] / b[k], c.C[1][k] / b[k]};
    return {Component{CompType::S, a, {}}, Component{CompType::T, b, {}}};
}

Vector kernel2(const Vector& row) { return {-row[1], row[0]}; }

Vector row_times(const Matrix& C, const Vector& t) { return mat_vec(C, t); }
Vector s_row(const Matrix& C, const Vector& s) { return {s[0] * C[0][0] + s[1] * C[1][0], s[0] * C[0][1] + s[1] * C[1][1]}; }

struct Event {
    BPoint p;
    int mult = 1;
};

/// Roots (t0 : t1) of A t0^2 + B t0 t1 + C t1^2.
struct QuadRoots {
    std::vector<std::pair<Vector, int>> exact;
    std::vector<std::array<lcplx, 2>> numeric;
};

QuadRoots quad_roots(const Scalar& A, const Scalar& B, const Scalar& C) {
    QuadRoots q;
    const Scalar disc = B * B - Scalar(4) * A * C;
    Scalar r;
    if (A.is_zero() && B.is_zero()) {
        q.exact.push_back({Vector{1, 0}, 2});
    } else if (disc.is_zero()) {
        q.exact.push_back({A.is_zero() ? Vector{1, 0} : Vector{-B, Scalar(2) * A}, 2});
    } else if (exact_sqrt(disc, r)) {
        if (A.is_zero()) {
            q.exact.push_back({Vector{1, 0}, 1});
            q.exact.push_back({Vector{-C, B}, 1});
        } else {
            q.exact.push_back({Vector{-B + r, Scalar(2) * A}, 1});
            q.exact.push_back({Vector{-B - r, Scalar(2) * A}, 1});
        }
    } else {
        const long double d = disc.to_long_double();
        const lcplx sq = d >= 0 ? lcplx(std::sqrt(d), 0) : lcplx(0, std::sqrt(-d));
        for (int sgn : {1, -1}) {
            q.numeric.push_back({(-B.to_long_double() + static_cast<long double>(sgn) * sq), 2 * A.to_long_double()});
        }
    }
    return q;
}

std::vector<Event> intersect(const Component& a, const Component& b) {
    auto is = [](const Component& c, CompType t) { return c.type == t; };
    if (is(a, CompType::S) && is(b, CompType::S)) return {};
    if (is(a, CompType::T) && is(b, CompType::T)) return {};
    if (is(a, CompType::T) && is(b, CompType::S)) return intersect(b, a);
    if (is(a, CompType::ST) && !is(b, CompType::ST)) return intersect(b, a);
    if (is(a, CompType::S) && is(b, CompType::T)) return {Event{exact_point(kernel2(a.a), kernel2(b.a))}};
    if (is(a, CompType::S)) {
        const Vector s = kernel2(a.a);
        return {Event{exact_point(s, kernel2(s_row(b.C, s)))}};
    }
    if (is(a, CompType::T)) {
        const Vector t = kernel2(a.a);
        return {Event{exact_point(kernel2(row_times(b.C, t)), t)}};
    }
    auto g = [&](const Vector& t) {
        const Vector u = row_times(a.C, t), v = row_times(b.C, t);
        return u[0] * v[1] - u[1] * v[0];
    };
    const Scalar A = g({1, 0}), C = g({0, 1}), B = g({1, 1}) - A - C;
    if (A.is_zero() && B.is_zero() && C.is_zero()) {
        throw std::invalid_argument("discriminant_curve_nodes: factors share a component (not square-free)");
    }
    std::vector<Event> out;
    const auto roots = quad_roots(A, B, C);
    for (const auto& [t, m] : roots.exact) out.push_back(Event{exact_point(kernel2(row_times(a.C, t)), t), m});
    for (const auto& t : roots.numeric) {
        std::array<lcplx, 2> u{};
        for (int i = 0; i < 2; ++i) u[i] = a.C[i][0].to_long_double() * t[0] + a.C[i][1].to_long_double() * t[1];
        Event e;
        e.p.exact = false;
        e.p.approx = approx_of({-u[1], u[0]}, t);
        out.push_back(e);
    }
    return out;
}

bool same_component(const Component& a, const Component& b) {
    if (a.type != b.type) return false;
    if (a.type != CompType::ST) return proportional(a.a, b.a);
    return proportional(Vector{a.C[0][0], a.C[0][1], a.C[1][0], a.C[1][1]},
                        Vector{b.C[0][0], b.C[0][1], b.C[1][0], b.C[1][1]});
}

}  // namespace

DiscriminantNodes discriminant_curve_nodes(const std::vector<MultiPoly>& factors) {
    std::vector<Component> comps;
    for (const auto& f : factors) {
        for (auto& c : split(parse_component(f))) comps.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            if (same_component(comps[i], comps[j])) {
                throw std::invalid_argument("discriminant_curve_nodes: repeated factor (not square-free)");
            }
        }
    }
    struct Group {
        BPoint p;
        std::set<std::size_t> comps;
        int delta = 0;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            for (const auto& e : intersect(comps[i], comps[j])) {
                auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return same_point(g.p, e.p); });
                if (it == groups.end()) {
                    groups.push_back(Group{e.p, {}, 0});
                    it = groups.end() - 1;
                }
                it->comps.insert(i);
                it->comps.insert(j);
                it->delta += e.mult;
            }
        }
    }
    DiscriminantNodes out;
    out.components = static_cast<int>(comps.size());
    for (const auto& g : groups) {
        RulingNode n;
        n.exact = g.p.exact;
        if (g.p.exact) n.point = RulingPoint{g.p.s[0], g.p.s[1], g.p.t[0], g.p.t[1]};
        n.approx = g.p.approx;
        n.branches = static_cast<int>(g.comps.size());
        n.delta = g.delta;
        n.numeric = !g.p.exact;
        out.delta += g.delta;
        out.nodes.push_back(std::move(n));
    }
    return out;
}

bool is_square_free(const MultiPoly& phi, std::uint64_t seed) {
    const MultiPoly g = phi.with_variables(ruling_coords());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(-50, 50);
    auto direction_ok = [&](const std::string& fix0, const std::string& fix1, const std::string& v0,
                            const std::string& v1) {
        for (int trial = 0; trial < 8; ++trial) {
            const MultiPoly r = substitute(g, {{fix0, MultiPoly(1)}, {fix1, MultiPoly(pick(rng))}});
            const BinaryForm f = BinaryForm::from_multipoly(r.with_variables({v0, v1}), v0, v1);
            if (f.degree() < 2 || !discriminant_binary(f).is_zero()) return true;
        }
        return false;
    };
    return direction_ok("s0", "s1", "t0", "t1") && direction_ok("t0", "t1", "s0", "s1");
}

DiscriminantNodes discriminant_curve_nodes(const MultiPoly& phi, std::uint64_t seed) {
    if (!is_square_free(phi, seed)) throw std::invalid_argument("discriminant_curve_nodes: phi is not square-free");
    const auto deg = multidegree(phi.with_variables(ruling_coords()), ruling_grading());
    if (deg && (*deg)[0] == 1 && (*deg)[1] == 1) return discriminant_curve_nodes(std::vector<MultiPoly>{phi});

    const detail::CompiledSystem<4> sys(phi.with_variables(ruling_coords()), ruling_coords());
    const double ftol = 1e-8 * std::max(1.0, sys.f.scale());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    std::vector<std::array<cplx, 4>> found;
    std::vector<bool> degenerate;
    for (int cs = 0; cs < 2; ++cs) {
        for (int ct = 0; ct < 2; ++ct) {
            const int fs = 1 - cs, ft = 3 - ct;  // free indices
            for (int start = 0; start < 400; ++start) {
                std::array<cplx, 4> x{};
                x[cs] = 1.0;
                x[2 + ct] = 1.0;
                x[fs] = cplx(box(rng), box(rng));
                x[ft] = cplx(box(rng), box(rng));
                bool ok = false;
                for (int it = 0; it < 60; ++it) {
                    Eigen::Matrix2cd J;
                    Eigen::Vector2cd r;
                    r << sys.grad[fs](x), sys.grad[ft](x);
                    J << sys.hess[fs][fs](x), sys.hess[fs][ft](x), sys.hess[ft][fs](x), sys.hess[ft][ft](x);
                    const Eigen::Vector2cd d = J.fullPivLu().solve(r);
                    x[fs] -= d(0);
                    x[ft] -= d(1);
                    if (std::abs(x[fs]) > 1e6 || std::abs(x[ft]) > 1e6) break;
                    if (d.norm() < 1e-14 * (1 + std::abs(x[fs]) + std::abs(x[ft]))) {
                        ok = true;
                        break;
                    }
                }
                if (!ok || std::abs(sys.f(x)) > ftol) continue;
                const auto ns = normalize_pair(x[0], x[1]);
                const auto nt = normalize_pair(x[2], x[3]);
                const std::array<cplx, 4> p{ns[0], ns[1], nt[0], nt[1]};
                const bool dup = std::any_of(found.begin(), found.end(), [&](const std::array<cplx, 4>& q) {
                    double d = 0;
                    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(p[i] - q[i]));
                    return d < 1e-7;
                });
                if (dup) continue;
                Eigen::Matrix2cd H;
                H << sys.hess[fs][fs](x), sys.hess[fs][ft](x), sys.hess[ft][fs](x), sys.hess[ft][ft](x);
                const auto sv = Eigen::JacobiSVD<Eigen::Matrix2cd>(H).singularValues();
                found.push_back(p);
                degenerate.push_back(sv(1) <= 1e-7 * std::max(sv(0), 1e-300));
            }
        }
    }
    DiscriminantNodes out;
    out.numeric_fallback = true;
    for (std::size_t i = 0; i < found.size(); ++i) {
        RulingNode n;
        n.exact = false;
        n.numeric = true;
        n.approx = found[i];
        n.branches = degenerate[i] ? 0 : 2;
        n.delta = 1;
        out.delta += 1;
        out.nodes.push_back(n);
    }
    std::sort(out.nodes.begin(), out.nodes.end(), [](const RulingNode& a, const RulingNode& b) {
        for (int i = 0; i < 4; ++i) {
            if (a.approx[i].real() != b.approx[i].real()) return a.approx[i].real() < b.approx[i].real();
            if (a.approx[i].imag() != b.approx[i].imag()) return a.approx[i].imag() < b.approx[i].imag();
        }
        return false;
    });
    return out;
}

}  // namespace nodal
