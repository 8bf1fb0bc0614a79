#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "nodal/multipoly.hpp"

namespace nodal::detail {

using cplx = std::complex<double>;

/// Floating evaluator for a polynomial in a fixed list of variables.
template <std::size_t N>
class CompiledPoly {
public:
    CompiledPoly() = default;
    CompiledPoly(const MultiPoly& p, const std::vector<std::string>& vars) {
        const MultiPoly q = p.with_variables(vars);
        for (const auto& [e, c] : q.terms()) {
            Term t;
            t.coef = c.to_double();
            for (std::size_t i = 0; i < N; ++i) {
                t.exp[i] = e[i];
                if (static_cast<int>(e[i]) > max_deg_) max_deg_ = static_cast<int>(e[i]);
            }
            scale_ += std::abs(t.coef);
            terms_.push_back(t);
        }
    }

    [[nodiscard]] cplx operator()(const std::array<cplx, N>& x) const {
        std::array<std::array<cplx, 16>, N> pw{};
        const int top = max_deg_ < 15 ? max_deg_ : 15;
        for (std::size_t i = 0; i < N; ++i) {
            pw[i][0] = 1.0;
            for (int k = 1; k <= top; ++k) pw[i][k] = pw[i][k - 1] * x[i];
        }
        cplx sum = 0.0;
        for (const auto& t : terms_) {
            cplx m = t.coef;
            for (std::size_t i = 0; i < N; ++i) {
                if (t.exp[i] == 0) continue;
                m *= t.exp[i] <= 15 ? pw[i][t.exp[i]] : std::pow(x[i], static_cast<double>(t.exp[i]));
            }
            sum += m;
        }
        return sum;
    }

    /// Sum of |coefficients|.
    [[nodiscard]] double scale() const { return scale_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }

private:
    struct Term {
        double coef = 0;
        std::array<unsigned, N> exp{};
    };
    std::vector<Term> terms_;
    int max_deg_ = 0;
    double scale_ = 0;
};

/// F with its gradient and Hessian in N variables.
template <std::size_t N>
struct CompiledSystem {
    CompiledPoly<N> f;
    std::array<CompiledPoly<N>, N> grad;
    std::array<std::array<CompiledPoly<N>, N>, N> hess;

    CompiledSystem(const MultiPoly& F, const std::vector<std::string>& vars) : f(F, vars) {
        for (std::size_t i = 0; i < N; ++i) {
            const MultiPoly gi = differentiate(F, vars[i]);
            grad[i] = CompiledPoly<N>(gi, vars);
            for (std::size_t j = 0; j < N; ++j) hess[i][j] = CompiledPoly<N>(differentiate(gi, vars[j]), vars);
        }
    }
};

}  // namespace nodal::detail

#include "nodal/singular.hpp"

namespace nodal::detail {

SingularPointRecord verify_numeric(const CompiledSystem<4>& sys, const ComplexPoint& P, double rank_tol = 1e-7);

}  // namespace nodal::detail
