#include "nodal/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal {

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Scalar inv = m[r][c].inverse();
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<Vector> nullspace(Matrix m, std::size_t columns) {
    for (const auto& row : m) {
        if (row.size() != columns) throw std::invalid_argument("nullspace: ragged matrix");
    }
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < columns; ++f) {
        if (is_pivot[f]) continue;
        Vector v(columns, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(Matrix m) {
    const std::size_t n = m.size();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Scalar inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const Scalar f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    Vector out(m.size(), Scalar(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

Vector normalize_projective(Vector v) {
    const auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == v.end()) throw std::invalid_argument("normalize_projective: zero vector");
    const Scalar inv = it->inverse();
    for (auto& x : v) x *= inv;
    return v;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool proportional(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

}  // namespace nodal
