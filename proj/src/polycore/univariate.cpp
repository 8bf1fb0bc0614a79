#include "nodal/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace nodal {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(unsigned k, const Scalar& c) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, std::string_view var) {
    for (const auto& v : p.used_variables()) {
        if (v != var) throw std::invalid_argument("UniPoly: polynomial involves '" + v + "' besides '" + std::string(var) + "'");
    }
    const auto cs = p.coefficients_in(var);
    std::vector<Scalar> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.constant_term());
    return UniPoly(std::move(out));
}

MultiPoly UniPoly::to_multipoly(const std::string& var) const {
    MultiPoly out(std::vector<std::string>{var});
    for (std::size_t k = 0; k < c_.size(); ++k) out.add_term(Exponent{static_cast<std::uint32_t>(k)}, c_[k]);
    return out;
}

Scalar UniPoly::operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double UniPoly::eval(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
    return acc;
}

std::complex<long double> UniPoly::eval(std::complex<long double> x) const {
    std::complex<long double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return {};
    return *this * leading().inverse();
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r(1), b = *this;
    while (e > 0) {
        if (e & 1U) r = r * b;
        e >>= 1U;
        if (e > 0) b = b * b;
    }
    return r;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UniPoly(*it);
    return acc;
}

std::string UniPoly::str(std::string_view var) const { return to_multipoly(std::string(var)).str(); }

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    std::vector<Scalar> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
    const Scalar inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        const Scalar f = r[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - db)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("divide_exact: not divisible");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return divide_exact(p, gcd(p, p.derivative())).monic();
}

namespace {

Scalar sylvester_det(const std::vector<Scalar>& f, const std::vector<Scalar>& g) {
    // f, g listed from the highest power down.
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    if (size == 0) return Scalar(1);
    std::vector<std::vector<Scalar>> s(size, std::vector<Scalar>(size, Scalar(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[k];
    // Gaussian elimination over Q.
    Scalar det(1);
    for (std::size_t c = 0; c < size; ++c) {
        std::size_t p = c;
        while (p < size && s[p][c].is_zero()) ++p;
        if (p == size) return Scalar(0);
        if (p != c) {
            std::swap(s[p], s[c]);
            det = -det;
        }
        det *= s[c][c];
        const Scalar inv = s[c][c].inverse();
        for (std::size_t r = c + 1; r < size; ++r) {
            if (s[r][c].is_zero()) continue;
            const Scalar f2 = s[r][c] * inv;
            for (std::size_t k = c; k < size; ++k) s[r][k] -= f2 * s[c][k];
        }
    }
    return det;
}

}  // namespace

Scalar resultant_univariate(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant_univariate: zero polynomial");
    std::vector<Scalar> f(p.coeffs().rbegin(), p.coeffs().rend());
    std::vector<Scalar> g(q.coeffs().rbegin(), q.coeffs().rend());
    return sylvester_det(f, g);
}

// ---------------------------------------------------------------------------
// Real roots

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

int sign_changes(const std::vector<UniPoly>& seq, const Scalar& x) {
    int changes = 0, last = 0;
    for (const auto& s : seq) {
        const int v = s(x).sign();
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

Scalar cauchy_bound(const UniPoly& p) {
    Scalar m(0);
    const Scalar lead = p.leading().abs();
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, p.coeff(static_cast<std::size_t>(k)).abs() / lead);
    // Round up to a power of two to keep bisection endpoints dyadic.
    Scalar b(1);
    while (b <= m + Scalar(1)) b *= Scalar(2);
    return b;
}

}  // namespace

int count_real_roots(const UniPoly& p, const Scalar& lo, const Scalar& hi) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    const auto seq = sturm_sequence(squarefree_part(p));
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Scalar& lo, const Scalar& hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    const UniPoly sq = squarefree_part(p);
    std::vector<RootInterval> out;
    if (sq.degree() <= 0) return out;
    const auto seq = sturm_sequence(sq);
    // Roots exactly at the left endpoint are reported as degenerate intervals.
    if (sq(lo).is_zero()) out.push_back({lo, lo});
    std::vector<RootInterval> stack{{lo, hi}};
    std::vector<RootInterval> found;
    while (!stack.empty()) {
        auto iv = stack.back();
        stack.pop_back();
        const int n = sign_changes(seq, iv.lo) - sign_changes(seq, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            found.push_back(iv);
            continue;
        }
        const Scalar mid = (iv.lo + iv.hi) / Scalar(2);
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    for (auto& iv : found) {
        if (sq(iv.hi).is_zero()) iv.lo = iv.hi;
        out.push_back(iv);
    }
    return out;
}

void refine_root(const UniPoly& squarefree, RootInterval& iv, const Scalar& width) {
    if (iv.lo == iv.hi) return;
    int slo = squarefree(iv.lo).sign();
    if (slo == 0) {
        iv.hi = iv.lo;
        return;
    }
    while (iv.hi - iv.lo > width) {
        const Scalar mid = (iv.lo + iv.hi) / Scalar(2);
        const int sm = squarefree(mid).sign();
        if (sm == 0) {
            iv.lo = iv.hi = mid;
            return;
        }
        if (sm == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
}

std::vector<long double> real_roots(const UniPoly& p, const Scalar& lo, const Scalar& hi, long double tol) {
    const UniPoly sq = squarefree_part(p);
    auto ivs = isolate_real_roots(sq, lo, hi);
    Scalar width(1);
    for (int k = 0; k < 200 && width.to_long_double() > tol; ++k) width /= Scalar(2);
    std::vector<long double> out;
    for (auto& iv : ivs) {
        refine_root(sq, iv, width);
        out.push_back(((iv.lo + iv.hi) / Scalar(2)).to_long_double());
    }
    return out;
}

std::vector<long double> real_roots(const UniPoly& p, long double tol) {
    if (p.degree() <= 0) return {};
    const Scalar b = cauchy_bound(p);
    return real_roots(p, -b, b, tol);
}

std::vector<std::complex<long double>> complex_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
    const int d = p.degree();
    std::vector<std::complex<long double>> out;
    if (d <= 0) return out;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    const Scalar lead = p.leading();
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -(p.coeff(static_cast<std::size_t>(i)) / lead).to_double();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    const UniPoly dp = p.derivative();
    for (int i = 0; i < d; ++i) {
        std::complex<long double> z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
        for (int it = 0; it < 8; ++it) {
            const auto fz = p.eval(z);
            const auto dz = dp.eval(z);
            if (std::abs(dz) == 0) break;
            z -= fz / dz;
        }
        out.push_back(z);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Binary forms

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("BinaryForm: empty coefficient list");
}

BinaryForm BinaryForm::from_multipoly(const MultiPoly& p, const std::string& x0, const std::string& x1) {
    for (const auto& v : p.used_variables()) {
        if (v != x0 && v != x1) throw std::invalid_argument("BinaryForm: unexpected variable '" + v + "'");
    }
    if (p.is_zero()) return BinaryForm(std::vector<Scalar>{Scalar(0)});
    if (!p.is_homogeneous()) throw std::invalid_argument("BinaryForm: polynomial is not homogeneous");
    const auto d = static_cast<std::size_t>(p.total_degree());
    std::vector<Scalar> c(d + 1, Scalar(0));
    const MultiPoly q = p.with_variables({x0, x1});
    for (const auto& [e, v] : q.terms()) c[e[1]] = v;
    return BinaryForm(std::move(c));
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

BinaryForm BinaryForm::d_x0() const {
    const unsigned d = degree();
    if (d == 0) return BinaryForm(std::vector<Scalar>{Scalar(0)});
    std::vector<Scalar> out(d);
    for (unsigned k = 0; k < d; ++k) out[k] = c_[k] * Scalar(static_cast<long>(d - k));
    return BinaryForm(std::move(out));
}

BinaryForm BinaryForm::d_x1() const {
    const unsigned d = degree();
    if (d == 0) return BinaryForm(std::vector<Scalar>{Scalar(0)});
    std::vector<Scalar> out(d);
    for (unsigned k = 1; k <= d; ++k) out[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return BinaryForm(std::move(out));
}

MultiPoly BinaryForm::to_multipoly(const std::string& x0, const std::string& x1) const {
    MultiPoly out(std::vector<std::string>{x0, x1});
    const auto d = static_cast<std::uint32_t>(degree());
    for (std::uint32_t k = 0; k <= d; ++k) out.add_term(Exponent{d - k, k}, c_[k]);
    return out;
}

UniPoly BinaryForm::dehomogenize() const {
    const unsigned d = degree();
    std::vector<Scalar> u(d + 1);
    for (unsigned k = 0; k <= d; ++k) u[d - k] = c_[k];
    return UniPoly(std::move(u));
}

Scalar resultant_univariate(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant_univariate: zero form");
    return sylvester_det(f.coeffs(), g.coeffs());
}

Scalar discriminant_binary(const BinaryForm& f) {
    const unsigned d = f.degree();
    if (d < 2) throw std::invalid_argument("discriminant_binary: degree must be at least 2");
    const BinaryForm fx = f.d_x0(), fy = f.d_x1();
    if (fx.is_zero() || fy.is_zero()) return Scalar(0);
    Scalar r = sylvester_det(fx.coeffs(), fy.coeffs());
    if ((d * (d - 1) / 2) % 2 == 1) r = -r;
    return r / Scalar(static_cast<long>(d)).pow(static_cast<int>(d) - 2);
}

// ---------------------------------------------------------------------------
// Rational functions

RationalFunction::RationalFunction(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    const UniPoly g = gcd(num, den);
    if (!num.is_zero() && g.degree() > 0) {
        num = divide_exact(num, g);
        den = divide_exact(den, g);
    }
    if (num.is_zero()) den = UniPoly(1);
    const Scalar lead = den.leading();
    num_ = num * lead.inverse();
    den_ = den * lead.inverse();
}

Scalar RationalFunction::operator()(const Scalar& x) const {
    const Scalar d = den_(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at " + x.str());
    return num_(x) / d;
}

long double RationalFunction::eval(long double x) const { return num_.eval(x) / den_.eval(x); }

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction RationalFunction::inverse() const { return {den_, num_}; }

std::string RationalFunction::str(std::string_view var) const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace nodal
