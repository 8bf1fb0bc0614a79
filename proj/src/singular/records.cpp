#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "compiled.hpp"
#include "nodal/linalg.hpp"
#include "nodal/singular.hpp"

namespace nodal {

using detail::cplx;

std::string to_string(NodeClass c) {
    switch (c) {
        case NodeClass::A1_node: return "A1_node";
        case NodeClass::higher_or_degenerate: return "higher_or_degenerate";
        case NodeClass::nonsingular: return "nonsingular";
    }
    return "nonsingular";
}

ComplexPoint normalize_point(const ComplexPoint& p) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (std::abs(p[i]) > std::abs(p[best])) best = i;
    }
    if (std::abs(p[best]) == 0.0) throw std::invalid_argument("normalize_point: zero vector");
    ComplexPoint out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = p[i] / p[best];
    out[best] = 1.0;
    return out;
}

ComplexPoint to_complex(const std::vector<Scalar>& p) {
    if (p.size() != 4) throw std::invalid_argument("to_complex: expected 4 coordinates");
    ComplexPoint c{};
    for (std::size_t i = 0; i < 4; ++i) c[i] = p[i].to_double();
    return normalize_point(c);
}

double point_distance(const ComplexPoint& a, const ComplexPoint& b) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (std::abs(a[i]) > std::abs(a[best])) best = i;
    }
    if (std::abs(b[best]) == 0.0) return 1e300;
    double d = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(a[i] / a[best] - b[i] / b[best]));
    }
    return d;
}

namespace {

NodeClass classify(bool gradient_zero, int hessian_rank) {
    if (!gradient_zero) return NodeClass::nonsingular;
    return hessian_rank == 3 ? NodeClass::A1_node : NodeClass::higher_or_degenerate;
}

}  // namespace

SingularPointRecord verify_singular(const MultiPoly& F, const std::vector<Scalar>& P) {
    if (P.size() != 4) throw std::invalid_argument("verify_singular: expected 4 coordinates");
    const MultiPoly G = F.with_variables(x_coords());
    SingularPointRecord r;
    r.exact = true;
    r.point = normalize_projective(P);
    r.approx = to_complex(r.point);
    bool zero = true;
    Matrix H(4, Vector(4));
    for (std::size_t i = 0; i < 4; ++i) {
        const MultiPoly gi = differentiate(G, x_coords()[i]);
        if (!evaluate(gi, r.point).is_zero()) zero = false;
        for (std::size_t j = 0; j < 4; ++j) H[i][j] = evaluate(differentiate(gi, x_coords()[j]), r.point);
    }
    r.hessian_rank = static_cast<int>(rank(H));
    r.classification = classify(zero, r.hessian_rank);
    return r;
}

SingularPointRecord verify_singular_numeric(const MultiPoly& F, const ComplexPoint& P, double rank_tol) {
    return detail::verify_numeric(detail::CompiledSystem<4>(F, x_coords()), P, rank_tol);
}

SingularPointRecord detail::verify_numeric(const CompiledSystem<4>& sys, const ComplexPoint& P, double rank_tol) {
    SingularPointRecord r;
    r.approx = normalize_point(P);
    double res = 0;
    for (std::size_t i = 0; i < 4; ++i) res = std::max(res, std::abs(sys.grad[i](r.approx)));
    r.gradient_residual = res;
    Eigen::Matrix4cd H;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) H(i, j) = sys.hess[i][j](r.approx);
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(H).singularValues();
    int rk = 0;
    for (int i = 0; i < 4; ++i) {
        if (sv(i) > rank_tol * std::max(sv(0), 1e-300)) ++rk;
    }
    if (sv(0) == 0.0) rk = 0;
    r.hessian_rank = rk;
    const double gtol = 1e-10 * std::max(1.0, sys.f.scale());
    r.classification = classify(res <= gtol, rk);
    return r;
}

namespace {

std::map<std::string, Scalar> family_assignment(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    if (x.size() != 4 || y.size() != 3) throw std::invalid_argument("family point: expected (x0..x3; y0..y2)");
    std::map<std::string, Scalar> a;
    for (std::size_t i = 0; i < 4; ++i) a[x_coords()[i]] = x[i];
    for (std::size_t i = 0; i < 3; ++i) a[y_coords()[i]] = y[i];
    return a;
}

Scalar eval_at(const MultiPoly& p, const std::map<std::string, Scalar>& a) {
    std::map<std::string, Scalar> used;
    for (const auto& v : p.used_variables()) {
        const auto it = a.find(v);
        if (it == a.end()) throw std::invalid_argument("family point: non-constant parameter " + v);
        used[v] = it->second;
    }
    return evaluate(p, used);
}

}  // namespace

FamilyPointCheck verify_family_singular(const DeformationSpec& spec, const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) {
    const auto a = family_assignment(x, y);
    FamilyPointCheck c;
    c.on_fibre = eval_at(spec.first, a).is_zero() && eval_at(spec.second, a).is_zero();
    std::vector<std::string> vars = y_coords();
    vars.insert(vars.end(), x_coords().begin(), x_coords().end());
    Matrix J(2);
    for (const auto& v : vars) {
        J[0].push_back(eval_at(differentiate(spec.first, v), a));
        J[1].push_back(eval_at(differentiate(spec.second, v), a));
    }
    c.jacobian_rank = static_cast<int>(rank(J));
    return c;
}

std::vector<std::vector<Scalar>> family_rank_matrix(const DeformationSpec& spec, const std::vector<Scalar>& x,
                                                    const std::vector<Scalar>& y) {
    const auto a = family_assignment(x, y);
    const Scalar phi = eval_at(spec.Phi, a), q = eval_at(spec.Q, a);
    const Scalar a1 = eval_at(spec.alpha1, a), a2 = eval_at(spec.alpha2, a);
    std::vector<std::vector<Scalar>> m(2);
    m[0] = {y[2], y[1], Scalar(-2) * y[0] * phi};
    m[1] = {a2, a1, -q};
    for (const auto& v : x_coords()) {
        m[0].push_back(-(y[0] * y[0]) * eval_at(differentiate(spec.Phi, v), a));
        m[1].push_back(-y[0] * eval_at(differentiate(spec.Q, v), a));
    }
    return m;
}

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NODAL_FAMILIES_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CensusAgreement compare_census(const std::vector<SingularPointRecord>& expected,
                               const std::vector<SingularPointRecord>& found, double tol) {
    CensusAgreement out;
    std::vector<bool> used(found.size(), false);
    for (const auto& e : expected) {
        bool hit = false;
        for (std::size_t j = 0; j < found.size(); ++j) {
            if (used[j] || point_distance(e.approx, found[j].approx) > tol) continue;
            used[j] = true;
            hit = true;
            break;
        }
        if (hit) {
            ++out.matched;
        } else {
            ++out.unmatched_expected;
        }
    }
    out.unmatched_found = static_cast<int>(std::count(used.begin(), used.end(), false));
    out.agree = out.unmatched_expected == 0 && out.unmatched_found == 0;
    return out;
}

int count_distinct(const std::vector<SingularPointRecord>& records, double tol) {
    std::vector<ComplexPoint> reps;
    for (const auto& r : records) {
        const bool dup = std::any_of(reps.begin(), reps.end(),
                                     [&](const ComplexPoint& p) { return point_distance(p, r.approx) <= tol; });
        if (!dup) reps.push_back(r.approx);
    }
    return static_cast<int>(reps.size());
}

}  // namespace nodal
