#pragma once

#include <random>
#include <string>
#include <vector>

#include "nodal/multipoly.hpp"

namespace nodal::testing {

inline Scalar random_scalar(std::mt19937_64& rng, long range = 5, long max_den = 3) {
    std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
    return Scalar(num(rng), den(rng));
}

inline Scalar random_nonzero(std::mt19937_64& rng, long range = 5, long max_den = 3) {
    for (;;) {
        Scalar s = random_scalar(rng, range, max_den);
        if (!s.is_zero()) return s;
    }
}

/// Random homogeneous polynomial of the given degree with about `terms` terms.
inline MultiPoly random_homogeneous(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned degree,
                                    unsigned terms) {
    MultiPoly p(vars);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    for (unsigned k = 0; k < terms; ++k) {
        Exponent e(vars.size(), 0);
        for (unsigned d = 0; d < degree; ++d) ++e[pick(rng)];
        p.add_term(e, random_nonzero(rng));
    }
    return p;
}

/// Random polynomial of total degree at most `degree`.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned degree,
                             unsigned terms) {
    MultiPoly p(vars);
    std::uniform_int_distribution<unsigned> deg(0, degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    for (unsigned k = 0; k < terms; ++k) {
        Exponent e(vars.size(), 0);
        const unsigned d = deg(rng);
        for (unsigned i = 0; i < d; ++i) ++e[pick(rng)];
        p.add_term(e, random_nonzero(rng));
    }
    return p;
}

inline MultiPoly random_linear(std::mt19937_64& rng, const std::vector<std::string>& vars) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < vars.size(); ++i) c.push_back(random_scalar(rng));
    return MultiPoly::linear(vars, c);
}

}  // namespace nodal::testing
