#include "nodal/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nodal {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            const auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            // Compare digit runs numerically (strip leading zeros).
            const auto sa = na.substr(std::min(na.find_first_not_of('0'), na.size()));
            const auto sb = nb.substr(std::min(nb.find_first_not_of('0'), nb.size()));
            if (sa.size() != sb.size()) return sa.size() < sb.size();
            if (sa != sb) return sa < sb;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly::MultiPoly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p(std::vector<std::string>{name});
    p.terms_.emplace(Exponent{1}, Scalar(1));
    return p;
}

MultiPoly MultiPoly::constant(const Scalar& c, std::vector<std::string> variables) {
    MultiPoly p(std::move(variables));
    if (!c.is_zero()) p.terms_.emplace(Exponent(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponent e, Scalar coeff) {
    if (e.size() != variables.size()) throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
    MultiPoly p(std::move(variables));
    if (!coeff.is_zero()) p.terms_.emplace(std::move(e), std::move(coeff));
    return p;
}

MultiPoly MultiPoly::linear(const std::vector<std::string>& variables, std::span<const Scalar> coeffs) {
    if (coeffs.size() != variables.size()) throw std::invalid_argument("MultiPoly::linear: length mismatch");
    MultiPoly p(variables);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Exponent e(variables.size(), 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), coeffs[i]);
    }
    return p;
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return i;
    }
    return std::nullopt;
}

std::vector<std::string> MultiPoly::used_variables() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) out.push_back(vars_[i]);
    }
    return out;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Scalar MultiPoly::constant_term() const {
    if (terms_.empty()) return Scalar(0);
    const auto& last = *terms_.rbegin();
    for (auto x : last.first) {
        if (x != 0) return Scalar(0);
    }
    return last.second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int MultiPoly::degree_in(std::string_view name) const {
    if (terms_.empty()) return -1;
    const auto idx = index_of(name);
    if (!idx) return 0;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
    return static_cast<int>(d);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    for (const auto& [e, c] : terms_) {
        if (static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0})) != d) return false;
    }
    return true;
}

bool MultiPoly::is_homogeneous_in(const std::vector<std::string>& subset, int* degree) const {
    std::vector<std::size_t> idx;
    for (const auto& v : subset) {
        if (auto i = index_of(v)) idx.push_back(*i);
    }
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int td = 0;
        for (auto i : idx) td += static_cast<int>(e[i]);
        if (d && *d != td) return false;
        d = td;
    }
    if (degree) *degree = d.value_or(-1);
    return true;
}

Scalar MultiPoly::leading_coefficient() const { return terms_.empty() ? Scalar(0) : terms_.begin()->second; }

Scalar MultiPoly::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view name) const {
    const int d = degree_in(name);
    if (d < 0) return {};
    std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1, MultiPoly(vars_));
    const auto idx = index_of(name);
    for (const auto& [e, c] : terms_) {
        if (!idx) {
            out[0].add_term(e, c);
            continue;
        }
        Exponent f = e;
        const auto k = f[*idx];
        f[*idx] = 0;
        out[k].add_term(f, c);
    }
    return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
    if (variables == vars_) return *this;
    std::vector<std::optional<std::size_t>> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::find(variables.begin(), variables.end(), vars_[i]);
        if (it != variables.end()) map[i] = static_cast<std::size_t>(it - variables.begin());
    }
    MultiPoly out(variables);
    for (const auto& [e, c] : terms_) {
        Exponent f(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!map[i]) throw std::invalid_argument("MultiPoly: variable '" + vars_[i] + "' missing from registry");
            f[*map[i]] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.vars_ != vars_) {
        auto merged = merge_variables(vars_, o.vars_);
        if (merged != vars_) *this = with_variables(merged);
        const MultiPoly other = o.with_variables(vars_);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const auto merged = merge_variables(a.vars_, b.vars_);
    const MultiPoly& aa = a.vars_ == merged ? a : a.with_variables(merged);
    const MultiPoly bm = b.with_variables(merged);
    MultiPoly out(merged);
    Exponent e(merged.size());
    for (const auto& [ea, ca] : aa.terms_) {
        for (const auto& [eb, cb] : bm.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Scalar& c) { return *this *= c.inverse(); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [e, c] : a.terms_) {
            if (it->first != e || it->second != c) return false;
            ++it;
        }
        return true;
    }
    return (a - b).is_zero();
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = MultiPoly::constant(Scalar(1), vars_);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Scalar mag = c.abs();
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        const bool is_const = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        if (!mag.is_one() || is_const) {
            os << mag.str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << vars_[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MultiPoly parse_all() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("MultiPoly::parse: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc /= d.constant_term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly(Scalar::parse(s_.substr(start, pos_ - start)));
        }
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            return MultiPoly::variable(std::string(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    MultiPoly p = Parser(text).parse_all();
    auto vars = p.variables();
    std::sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
    return p.with_variables(vars);
}

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(text).parse_all().with_variables(variables);
}

// ---------------------------------------------------------------------------
// Calculus and substitution

MultiPoly differentiate(const MultiPoly& p, std::string_view var) {
    const auto idx = p.index_of(var);
    if (!idx) throw std::invalid_argument("differentiate: unknown variable '" + std::string(var) + "'");
    MultiPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (e[*idx] == 0) continue;
        Exponent f = e;
        f[*idx] -= 1;
        out.add_term(f, c * Scalar(static_cast<long>(e[*idx])));
    }
    return out;
}

std::vector<MultiPoly> gradient(const MultiPoly& p, const std::vector<std::string>& vars) {
    std::vector<MultiPoly> g;
    g.reserve(vars.size());
    for (const auto& v : vars) {
        g.push_back(p.has_variable(v) ? differentiate(p, v) : MultiPoly(p.variables()));
    }
    return g;
}

MultiPoly substitute(const MultiPoly& p, const Substitution& assignments) {
    const auto& vars = p.variables();
    std::vector<const MultiPoly*> images(vars.size(), nullptr);
    std::vector<std::string> kept;
    std::vector<std::string> out_vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto it = assignments.find(vars[i]);
        if (it != assignments.end()) {
            images[i] = &it->second;
        } else {
            out_vars.push_back(vars[i]);
        }
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (images[i]) out_vars = merge_variables(out_vars, images[i]->variables());
    }
    // Cached powers of each substituted image, aligned to the output registry.
    std::vector<std::vector<MultiPoly>> powers(vars.size());
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(MultiPoly::constant(Scalar(1), out_vars));
            cache.push_back(images[i]->with_variables(out_vars));
        }
        while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
        return cache[k];
    };
    std::vector<std::optional<std::size_t>> kept_index(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!images[i]) {
            kept_index[i] = static_cast<std::size_t>(
                std::find(out_vars.begin(), out_vars.end(), vars[i]) - out_vars.begin());
        }
    }
    MultiPoly out(out_vars);
    for (const auto& [e, c] : p.terms()) {
        Exponent base(out_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (kept_index[i]) base[*kept_index[i]] = e[i];
        }
        MultiPoly term = MultiPoly::monomial(out_vars, base, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (images[i] && e[i] > 0) term = term * power_of(i, e[i]);
        }
        out += term;
    }
    return out;
}

Substitution compose(const Substitution& sigma, const Substitution& tau) {
    Substitution out;
    for (const auto& [v, img] : sigma) out.emplace(v, substitute(img, tau));
    for (const auto& [v, img] : tau) out.emplace(v, img);  // no-op when already present
    return out;
}

Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point) {
    const auto& vars = p.variables();
    if (point.size() != vars.size()) {
        throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " +
                                    std::to_string(vars.size()));
    }
    std::vector<std::vector<Scalar>> powers(vars.size());
    Scalar total(0);
    for (const auto& [e, c] : p.terms()) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(Scalar(1));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * point[i]);
            term *= cache[e[i]];
        }
        total += term;
    }
    return total;
}

Scalar evaluate(const MultiPoly& p, const std::map<std::string, Scalar>& point) {
    std::vector<Scalar> pt;
    pt.reserve(p.variables().size());
    const auto used = p.used_variables();
    for (const auto& v : p.variables()) {
        const auto it = point.find(v);
        if (it != point.end()) {
            pt.push_back(it->second);
        } else if (std::find(used.begin(), used.end(), v) != used.end()) {
            throw std::invalid_argument("evaluate: no value for variable '" + v + "'");
        } else {
            pt.emplace_back(0);
        }
    }
    return evaluate(p, pt);
}

MultiPoly divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    const auto vars = merge_variables(dividend.variables(), divisor.variables());
    MultiPoly r = dividend.with_variables(vars);
    const MultiPoly d = divisor.with_variables(vars);
    const auto& [lead_e, lead_c] = *d.terms().begin();
    MultiPoly q(vars);
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().begin();
        Exponent f(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (re[i] < lead_e[i]) throw std::domain_error("divide_exact: not divisible");
            f[i] = re[i] - lead_e[i];
        }
        const MultiPoly t = MultiPoly::monomial(vars, f, rc / lead_c);
        q += t;
        r -= t * d;
    }
    return q;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    }
    if (n == 0) return MultiPoly(Scalar(1));
    int sign = 1;
    MultiPoly prev(Scalar(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k].is_zero()) ++swap;
            if (swap == n) return MultiPoly(Scalar(0));
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const auto cp = p.coefficients_in(var);
    const auto cq = q.coefficients_in(var);
    const std::size_t m = cp.size() - 1, n = cq.size() - 1;
    if (m == 0 && n == 0) return MultiPoly(Scalar(1));
    const std::size_t size = m + n;
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(Scalar(0))));
    // Rows hold coefficients from the highest power down.
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = cp[m - k];
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = cq[n - k];
    }
    return determinant(std::move(s));
}

MultiPoly quadratic_discriminant(const MultiPoly& p, std::string_view var) {
    const auto c = p.coefficients_in(var);
    if (c.size() != 3) throw std::invalid_argument("quadratic_discriminant: polynomial is not quadratic in the variable");
    return c[1] * c[1] - Scalar(4) * c[2] * c[0];
}

std::optional<std::vector<int>> multidegree(const MultiPoly& p, const Grading& grading) {
    std::size_t width = 0;
    for (const auto& [v, w] : grading) width = std::max(width, w.size());
    std::optional<std::vector<int>> result;
    const auto& vars = p.variables();
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> deg(width, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const auto it = grading.find(vars[i]);
            if (it == grading.end()) continue;
            for (std::size_t k = 0; k < it->second.size(); ++k) deg[k] += it->second[k] * static_cast<int>(e[i]);
        }
        if (result && *result != deg) return std::nullopt;
        result = deg;
    }
    if (!result) result = std::vector<int>(width, 0);
    return result;
}

bool is_homogeneous(const MultiPoly& p, const Grading& grading) { return multidegree(p, grading).has_value(); }

}  // namespace nodal
