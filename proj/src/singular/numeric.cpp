#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "compiled.hpp"
#include "nodal/singular.hpp"

namespace nodal {

namespace {

using detail::cplx;

struct Hit {
    bool ok = false;
    ComplexPoint p{};
};

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Hit newton(const detail::CompiledSystem<4>& sys, int chart, std::uint64_t seed, const NumericSearchConfig& cfg,
           double gtol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    std::array<int, 3> free{};
    for (int i = 0, k = 0; i < 4; ++i) {
        if (i != chart) free[k++] = i;
    }
    ComplexPoint x{};
    x[chart] = 1.0;
    for (int i : free) x[i] = cplx(box(rng), box(rng));
    bool converged = false;
    for (int it = 0; it < cfg.max_iter && !converged; ++it) {
        Eigen::Matrix3cd J;
        Eigen::Vector3cd r;
        for (int a = 0; a < 3; ++a) {
            r(a) = sys.grad[free[a]](x);
            for (int b = 0; b < 3; ++b) J(a, b) = sys.hess[free[a]][free[b]](x);
        }
        const Eigen::Vector3cd d = J.fullPivLu().solve(r);
        if (!d.allFinite()) return {};
        double size = 1;
        for (int a = 0; a < 3; ++a) {
            x[free[a]] -= d(a);
            size += std::abs(x[free[a]]);
        }
        if (size > 1e8) return {};
        converged = d.norm() <= 1e-12 * size;
    }
    if (!converged) return {};
    const ComplexPoint p = normalize_point(x);
    for (int i = 0; i < 4; ++i) {
        if (std::abs(sys.grad[i](p)) > gtol) return {};
    }
    return {true, p};
}

bool canonical_less(const ComplexPoint& a, const ComplexPoint& b) {
    for (int i = 0; i < 4; ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

std::optional<std::vector<Scalar>> snap(const ComplexPoint& p, long max_den) {
    std::vector<Scalar> out;
    for (const auto& c : p) {
        if (std::abs(c.imag()) > 1e-9) return std::nullopt;
        const Scalar r = rational_approximation(c.real(), max_den);
        if (std::abs(r.to_double() - c.real()) > 1e-9) return std::nullopt;
        out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<SingularPointRecord> numeric_singular_search(const MultiPoly& F, const NumericSearchConfig& cfg) {
    const MultiPoly G = F.with_variables(x_coords());
    const detail::CompiledSystem<4> sys(G, x_coords());
    const double gtol = 1e-10 * std::max(1.0, sys.f.scale());
    const std::size_t per_chart = static_cast<std::size_t>(std::max(cfg.starts, 0));
    const std::size_t total = 4 * per_chart;
    std::vector<Hit> hits(total);

    const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(cfg.threads), static_cast<unsigned>(total)));
    auto run = [&](unsigned w) {
        for (std::size_t k = w; k < total; k += workers) {
            const int chart = static_cast<int>(k / per_chart);
            hits[k] = newton(sys, chart, mix(cfg.seed ^ mix(k)), cfg, gtol);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    // Newton converges only linearly at degenerate points, so those clusters merge at sqrt(tol).
    std::vector<SingularPointRecord> reps;
    const double loose = std::sqrt(cfg.tol);
    for (const auto& h : hits) {
        if (!h.ok) continue;
        SingularPointRecord rec = detail::verify_numeric(sys, h.p);
        const bool degenerate = rec.classification != NodeClass::A1_node;
        const bool dup = std::any_of(reps.begin(), reps.end(), [&](const SingularPointRecord& q) {
            const bool both = degenerate && q.classification != NodeClass::A1_node;
            return point_distance(q.approx, h.p) <= (both ? loose : cfg.tol);
        });
        if (!dup) reps.push_back(std::move(rec));
    }
    std::sort(reps.begin(), reps.end(), [](const SingularPointRecord& a, const SingularPointRecord& b) {
        return canonical_less(a.approx, b.approx);
    });

    std::vector<SingularPointRecord> out;
    for (auto& rec : reps) {
        const ComplexPoint p = rec.approx;
        if (const auto s = snap(p, cfg.snap_max_den)) {
            SingularPointRecord ex = verify_singular(G, *s);
            if (ex.classification != NodeClass::nonsingular) {
                ex.snapped = true;
                rec = std::move(ex);
            }
        }
        rec.origin = "newton";
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace nodal
