#include "nodal/identities.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <stdexcept>

#include "nodal/singular.hpp"

namespace nodal {

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

/// Generic form of the given degree in vars with coefficients prefix0, prefix1, ...
MultiPoly generic_form(const std::vector<std::string>& vars, unsigned degree, const std::string& prefix) {
    MultiPoly out(0);
    unsigned k = 0;
    std::vector<unsigned> e(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == vars.size()) {
            e[i] = left;
            MultiPoly m = var(prefix + std::to_string(k++));
            for (std::size_t j = 0; j < vars.size(); ++j) m *= var(vars[j]).pow(e[j]);
            out += m;
            return;
        }
        for (unsigned d = 0; d <= left; ++d) {
            e[i] = left - d;
            self(self, i + 1, d);
        }
    };
    rec(rec, 0, degree);
    return out;
}

/// Random form with small integer coefficients.
MultiPoly random_form(std::mt19937_64& rng, unsigned degree) {
    std::uniform_int_distribution<int> d(-5, 5);
    MultiPoly out(0);
    const auto& x = x_coords();
    for (unsigned a = 0; a <= degree; ++a)
        for (unsigned b = 0; a + b <= degree; ++b)
            for (unsigned c = 0; a + b + c <= degree; ++c) {
                out += Scalar(d(rng)) * var(x[0]).pow(a) * var(x[1]).pow(b) * var(x[2]).pow(c) *
                       var(x[3]).pow(degree - a - b - c);
            }
    return out;
}

/// Removes common powers of the monomials lambda and its formal inverse.
MultiPoly cancel_inverse(const MultiPoly& p, const std::string& v, const std::string& inv) {
    const auto iv = p.index_of(v), ii = p.index_of(inv);
    if (!iv || !ii) return p;
    MultiPoly out(0);
    for (const auto& [exp, c] : p.terms()) {
        Exponent e = exp;
        const auto m = std::min(e[*iv], e[*ii]);
        e[*iv] -= m;
        e[*ii] -= m;
        out += MultiPoly::monomial(p.variables(), e, c);
    }
    return out;
}

}  // namespace

IdentityReport check(const IdentityCase& c) {
    IdentityReport r{c.name, c.anchor, MultiPoly(0)};
    for (const auto& [computed, displayed] : c.sides) {
        MultiPoly w = computed - displayed;
        if (!w.is_zero()) {
            r.witness = std::move(w);
            break;
        }
    }
    return r;
}

std::vector<IdentityCase> perturbations(const IdentityCase& c) {
    std::vector<IdentityCase> out;
    for (std::size_t k = 0; k < c.sides.size(); ++k) {
        const MultiPoly& d = c.sides[k].second;
        if (d.is_zero()) {
            IdentityCase p = c;
            p.sides[k].second = MultiPoly(1);
            out.push_back(std::move(p));
            continue;
        }
        for (const auto& [e, coef] : d.terms()) {
            IdentityCase p = c;
            p.sides[k].second += MultiPoly::monomial(d.variables(), e);
            out.push_back(std::move(p));
        }
    }
    return out;
}

IdentityCase verify_chart_blowdown(unsigned n) {
    if (n < 2) throw std::invalid_argument("verify_chart_blowdown: n >= 2");
    const MultiPoly w0 = var("w0"), s0 = var("s0"), s1 = var("s1"), t0 = var("t0"), t1 = var("t1");
    auto v = [&](unsigned i, unsigned j) { return w0 * s0.pow(1 - i) * s1.pow(i) * t0.pow(n - 1 - j) * t1.pow(j); };
    std::vector<std::vector<MultiPoly>> m(3);
    for (unsigned j = 0; j < n; ++j) {
        m[0].push_back(t0.pow(n - 1 - j) * t1.pow(j));
        m[1].push_back(v(0, j));
        m[2].push_back(v(1, j));
    }
    IdentityCase c{"chart n=" + std::to_string(n), "blow-down chart: 2x2 minors and the two chart equations", {}};
    for (unsigned r1 = 0; r1 < 3; ++r1)
        for (unsigned r2 = r1 + 1; r2 < 3; ++r2)
            for (unsigned j = 0; j < n; ++j)
                for (unsigned k = j + 1; k < n; ++k) {
                    c.sides.emplace_back(m[r1][j] * m[r2][k] - m[r1][k] * m[r2][j], MultiPoly(0));
                }
    for (unsigned i = 0; i < 2; ++i) {
        c.sides.emplace_back(v(i, 0) * t1.pow(n - 1) - v(i, n - 1) * t0.pow(n - 1), MultiPoly(0));
    }
    return c;
}

IdentityCase verify_birational_map(const MultiPoly& K, const MultiPoly& L, const MultiPoly& psi1,
                                   const MultiPoly& psi2) {
    const Substitution segre = quadric_context().segre;
    const MultiPoly phi = substitute(K, segre);
    const MultiPoly w0 = var("w0"), w1 = var("w1"), w2 = var("w2");
    const Substitution map{{"y0", w0}, {"y1", psi2 * w1}, {"y2", psi1 * w2}};
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const MultiPoly first = substitute(substitute(y1 * y2 - K * L * y0 * y0, segre), map);
    return {"birational map", "conic bundle pulled back along (w0 : psi2 w1 : psi1 w2)",
            {{psi1 * psi2, substitute(L, segre)}, {first, psi1 * psi2 * (w1 * w2 - phi * w0 * w0)}}};
}

IdentityCase verify_elimination(const MultiPoly& K, const MultiPoly& L, const MultiPoly& Q) {
    const MultiPoly a1 = var("alpha1"), a2 = var("alpha2");
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const MultiPoly first = y1 * y2 - K * L * y0 * y0;
    const MultiPoly second = a2 * y1 + a1 * y2 - Q * y0;
    const MultiPoly eliminated = resultant(first, second, "y1");
    const MultiPoly displayed = a1 * y2 * y2 - Q * y0 * y2 + a2 * K * L * y0 * y0;
    return {"elimination", "eliminating y1: the double cover and its branch quartic",
            {{eliminated, displayed},
             {quadratic_discriminant(eliminated, "y2"), y0 * y0 * (Q * Q - Scalar(4) * a1 * a2 * K * L)}}};
}

IdentityCase verify_delta_reduction(const MultiPoly& K, const MultiPoly& L, const MultiPoly& Q) {
    const MultiPoly a1 = var("alpha1");
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const MultiPoly eliminated = resultant(y1 * y2 - K * L * y0 * y0, a1 * y2 - Q * y0, "y2");
    return {"delta reduction", "alpha2 = 0: blow-up of P^3 along Q = KL = 0",
            {{eliminated, -(y0 * (y1 * Q - a1 * K * L * y0))}}};
}

IdentityCase verify_tangent_product(const MultiPoly& a0, const MultiPoly& a1, const MultiPoly& b0,
                                    const MultiPoly& b1, const MultiPoly& lambda, const MultiPoly& mu) {
    const auto L = fourteen_nodal_planes(a0, a1, b0, b1, lambda, mu);
    return {"tangent product", "four tangent planes: L0 L3 - L1 L2 is a multiple of Q",
            {{L[0] * L[3] - L[1] * L[2], (a1 - lambda * a0) * (b1 - mu * b0) * quadric()}}};
}

IdentityCase verify_trivial_deformation(const MultiPoly& Phi, const MultiPoly& M, const MultiPoly& Q) {
    const MultiPoly a1 = var("alpha1"), a2 = var("alpha2");
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const MultiPoly second = a2 * y1 + a1 * y2 - Q * y0;
    const MultiPoly lhs = y1 * y2 - Phi * y0 * y0 - M * y0 * second;
    const MultiPoly rhs = (y1 - a1 * M * y0) * (y2 - a2 * M * y0) -
                          (Phi - M * (Q - Scalar(2) * a1 * a2 * M) - a1 * a2 * M * M) * y0 * y0;
    const MultiPoly rewritten =
        a2 * (y1 - a1 * M * y0) + a1 * (y2 - a2 * M * y0) - (Q - Scalar(2) * a1 * a2 * M) * y0;
    return {"trivial deformation", "adding M y0 times the linear equation", {{lhs, rhs}, {rewritten, second}}};
}

IdentityCase verify_small_resolution_chart(const MultiPoly& L) {
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2"), z0 = var("z0"), z1 = var("z1");
    const MultiPoly a1 = var("alpha1"), a2 = var("alpha2"), Q = var("Q"), K = var("K");
    // rows (y1, L y0, z0) and (K y0, y2, z1)
    const std::array<MultiPoly, 3> top{y1, L * y0, z0}, bottom{K * y0, y2, z1};
    const Substitution chart{{"y0", MultiPoly(1)}, {"z0", MultiPoly(1)}, {"y2", L * z1}, {"K", y1 * z1}};
    IdentityCase c{"small resolution chart", "chart z0 = 1 = y0 of the partial small resolution", {}};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            c.sides.emplace_back(substitute(top[i] * bottom[j] - top[j] * bottom[i], chart), MultiPoly(0));
        }
    c.sides.emplace_back(substitute(a2 * y1 + a1 * y2 - Q * y0, chart), a2 * y1 + a1 * L * z1 - Q);
    c.sides.emplace_back(substitute(y1 * y2 - K * L * y0 * y0, chart), MultiPoly(0));
    return c;
}

IdentityCase verify_segre() {
    const Substitution s = segre_parametrization();
    const MultiPoly x = s.at("x"), y = s.at("y"), z = s.at("z");
    const MultiPoly xp = s.at("xp"), yp = s.at("yp"), zp = s.at("zp");
    return {"segre cubic", "Segre cubic on the quadrics through five points",
            {{x + y + z + xp + yp + zp, MultiPoly(0)}, {x * y * z + xp * yp * zp, MultiPoly(0)}}};
}

IdentityCase verify_igusa_hyperplane() {
    const Substitution s = igusa_parametrization();
    return {"igusa hyperplane", "Igusa quartic: the hyperplane a + b + c + a' + b' + c' = 0",
            {{s.at("a") + s.at("b") + s.at("c") + s.at("ap") + s.at("bp") + s.at("cp"), MultiPoly(0)}}};
}

IdentityCase verify_igusa_quartic() {
    const Substitution s = igusa_parametrization();
    const MultiPoly A = s.at("a") * s.at("ap"), B = s.at("b") * s.at("bp"), C = s.at("c") * s.at("cp");
    const MultiPoly rational =
        A * A + B * B + C * C - Scalar(2) * A * B - Scalar(2) * A * C - Scalar(2) * B * C;
    return {"igusa quartic", "Igusa quartic: sqrt(aa') + sqrt(bb') + sqrt(cc') = 0 rationalized",
            {{rational, MultiPoly(0)}}};
}

IdentityCase verify_kummer_branch(const KummerParams& p) {
    const KummerFamily f = kummer_family(p);
    const MultiPoly y0 = var("y0");
    const MultiPoly a = var("a"), ap = var("ap"), b = var("b"), bp = var("bp"), c = var("c");
    const MultiPoly aa = p.alpha1 * p.alpha2;
    const MultiPoly cc2 = c * f.c2;
    const MultiPoly rational = (-(aa * cc2) + a * ap - b * bp).pow(2) + Scalar(4) * aa * a * ap * cc2;
    const MultiPoly eliminated = resultant(f.first, f.second, "y1");
    return {"kummer branch", "Kummer section: rational form of the branch quartic",
            {{quadratic_discriminant(eliminated, "y2"), y0 * y0 * rational}}};
}

IdentityCase verify_kummer_reducible(const KummerParams& p) {
    const KummerFamily f = kummer_family(p);
    const Substitution on{{"a", MultiPoly(0)}};
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const MultiPoly aa = p.alpha1 * p.alpha2;
    const MultiPoly cc2 = var("c") * substitute(f.c2, on);
    return {"kummer reducible fibre", "Kummer section on a = 0: two sections tangent along a quadric",
            {{substitute(f.first, on), y1 * y2},
             {substitute(f.second, on), p.alpha2 * y1 + p.alpha1 * y2 + (aa * cc2 + var("b") * var("bp")) * y0}}};
}

GaussPoly GaussPoly::substitute(const Substitution& s) const { return {nodal::substitute(re, s), nodal::substitute(im, s)}; }

GaussPoly real_involution(const GaussPoly& p) {
    const Substitution swap{{"x1", var("x2")},         {"x2", var("x1")},         {"y1", var("y2")},
                            {"y2", var("y1")},         {"alpha1", var("alpha2")}, {"alpha2", var("alpha1")}};
    return p.conj().substitute(swap);
}

IdentityCase verify_real_structure(const GaussPoly& first, const GaussPoly& second) {
    const GaussPoly f = real_involution(first), s = real_involution(second);
    return {"real structure", "conjugation composed with the swap of the rulings",
            {{f.re, first.re}, {f.im, first.im}, {s.re, second.re}, {s.im, second.im}}};
}

IdentityCase verify_scaling_invariance(const MultiPoly& Phi, const MultiPoly& Q) {
    const MultiPoly a = var("a"), b = var("b"), lam = var("lambda"), lam_inv = var("lambda_inv");
    const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
    const MultiPoly a1 = var("alpha1"), a2 = var("alpha2");
    Substitution act{{"y0", b * y0}, {"y1", lam * b * a * a * y1}, {"y2", b * a * a * y2}, {"alpha2", lam_inv * a2}};
    for (const auto& x : x_coords()) act[x] = a * var(x);
    // Phi is replaced by lambda Phi before it is read at a x.
    const MultiPoly first = y1 * y2 - var("Phi") * y0 * y0;
    const MultiPoly second = a2 * y1 + a1 * y2 - Q * y0;
    MultiPoly f = substitute(substitute(first, act), {{"Phi", lam * substitute(Phi, act)}});
    MultiPoly s = substitute(second, act);
    f = cancel_inverse(f, "lambda", "lambda_inv");
    s = cancel_inverse(s, "lambda", "lambda_inv");
    const MultiPoly orig_first = substitute(first, {{"Phi", Phi}});
    return {"scaling invariance", "torus action on (x; y; alpha; Phi)",
            {{f, lam * b * b * a.pow(4) * orig_first}, {s, b * a * a * second}}};
}

ContactConic contact_conic_degeneration(const std::array<MultiPoly, 4>& L, const MultiPoly& Q,
                                        const std::array<std::vector<Scalar>, 3>& plane) {
    const MultiPoly lam = var("lambda"), mu = var("mu");
    const std::vector<std::string> p{"p0", "p1", "p2"};
    Substitution on;
    for (std::size_t i = 0; i < 4; ++i) {
        MultiPoly xi(0);
        for (std::size_t k = 0; k < 3; ++k) xi += plane[k].at(i) * var(p[k]);
        on[x_coords()[i]] = xi;
    }
    const MultiPoly conic =
        substitute(lam * lam * L[0] * L[1] + Scalar(2) * lam * mu * Q + mu * mu * L[2] * L[3], on);
    std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = differentiate(differentiate(conic, p[i]), p[j]) / Scalar(2);
    ContactConic out;
    out.determinant = determinant(m);
    if (out.determinant.is_zero()) throw std::invalid_argument("contact_conic_degeneration: every conic degenerates");
    MultiPoly q;
    try {
        q = divide_exact(out.determinant, lam * mu);
    } catch (const std::exception&) {
        throw std::invalid_argument("contact_conic_degeneration: determinant not divisible by lambda mu");
    }
    out.quartic = BinaryForm::from_multipoly(q.with_variables({"lambda", "mu"}), "lambda", "mu");
    return out;
}

IdentityCase verify_contact_conic(const std::array<MultiPoly, 4>& L, const MultiPoly& Q,
                                  const std::array<std::vector<Scalar>, 3>& plane) {
    const ContactConic c = contact_conic_degeneration(L, Q, plane);
    const MultiPoly& d = c.determinant;
    MultiPoly rest(0);
    const auto il = d.index_of("lambda"), im = d.index_of("mu");
    for (const auto& [e, coef] : d.terms()) {
        if (!il || !im || e[*il] == 0 || e[*im] == 0) rest += MultiPoly::monomial(d.variables(), e, coef);
    }
    return {"contact conic degeneration", "system of contact conics from the symmetric determinantal form",
            {{rest, MultiPoly(0)}, {MultiPoly(static_cast<long>(c.quartic.degree())), MultiPoly(4)}}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",         "chart",          "birational",       "elimination",
                                                "delta",       "tangent-product", "trivdef",         "small-resolution",
                                                "segre-igusa", "kummer",          "real-structure",  "scaling",
                                                "contact-conic"};
    return names;
}

namespace {

std::vector<IdentityCase> cases_for(const std::string& suite) {
    std::mt19937_64 rng(20240101);
    const MultiPoly K = var("K"), L = var("L"), Q = var("Q");
    if (suite == "chart") return {verify_chart_blowdown(2), verify_chart_blowdown(3), verify_chart_blowdown(5)};
    if (suite == "birational") {
        const MultiPoly lam = var("lambda"), mu = var("mu");
        const MultiPoly s0 = var("s0"), s1 = var("s1"), t0 = var("t0"), t1 = var("t1");
        IdentityCase symbolic = verify_birational_map(generic_form(x_coords(), 3, "k"),
                                                      tangent_plane(MultiPoly(1), lam, MultiPoly(1), mu),
                                                      lam * s0 - s1, mu * t0 - t1);
        symbolic.name += " (symbolic)";
        IdentityCase formal = verify_birational_map(generic_form(x_coords(), 3, "k"), MultiPoly(1), MultiPoly(1),
                                                    MultiPoly(1));
        formal.name += " (psi = 1)";
        std::uniform_int_distribution<int> d(1, 9);
        const Scalar a0 = d(rng), a1 = d(rng), b0 = d(rng), b1 = d(rng);
        IdentityCase numeric =
            verify_birational_map(random_form(rng, 3), tangent_plane(a0, a1, b0, b1), a1 * s0 - a0 * s1, b1 * t0 - b0 * t1);
        numeric.name += " (random n=3)";
        return {symbolic, formal, numeric};
    }
    if (suite == "elimination") {
        IdentityCase formal = verify_elimination(K, L, Q);
        formal.name += " (symbolic)";
        IdentityCase numeric = verify_elimination(random_form(rng, 3), random_form(rng, 1), quadric());
        numeric.name += " (random)";
        return {formal, numeric};
    }
    if (suite == "delta") return {verify_delta_reduction(K, L, Q)};
    if (suite == "tangent-product") {
        return {verify_tangent_product(var("a0"), var("a1"), var("b0"), var("b1"), var("lambda"), var("mu"))};
    }
    if (suite == "trivdef") return {verify_trivial_deformation(var("Phi"), var("M"), Q)};
    if (suite == "small-resolution") return {verify_small_resolution_chart(L)};
    if (suite == "segre-igusa") return {verify_segre(), verify_igusa_hyperplane(), verify_igusa_quartic()};
    if (suite == "kummer") {
        KummerParams p;
        p.alpha1 = var("alpha1");
        p.alpha2 = var("alpha2");
        p.a0 = var("a0");
        p.a1 = var("a1");
        p.b0 = var("b0");
        p.b1 = var("b1");
        return {verify_kummer_branch(p), verify_kummer_reducible(p)};
    }
    if (suite == "real-structure") {
        const MultiPoly x0 = var("x0"), x3 = var("x3");
        const MultiPoly y0 = var("y0"), y1 = var("y1"), y2 = var("y2");
        const GaussPoly i = GaussPoly::i();
        // K = (x0 + i x3)(x0 - i x3)(x0 + 2 x3), L = x0 - 3 x3
        const GaussPoly Kc = (GaussPoly(x0) + i * GaussPoly(x3)) * (GaussPoly(x0) - i * GaussPoly(x3)) *
                             GaussPoly(x0 + Scalar(2) * x3);
        const GaussPoly first = GaussPoly(y1 * y2) + Kc * GaussPoly((x0 - Scalar(3) * x3) * y0 * y0);
        const GaussPoly second(var("alpha2") * y1 + var("alpha1") * y2 - quadric() * y0);
        IdentityCase torus = verify_real_structure(first, second);
        torus.name += " (torus family)";
        const MultiPoly x1 = var("x1"), x2 = var("x2");
        const MultiPoly phi = x0.pow(4) + Scalar(3) * x1 * x2 * (x0 * x0 + x3 * x3) + x1.pow(2) * x2.pow(2) -
                              Scalar(2) * (x1.pow(3) * x0 + x2.pow(3) * x0);
        IdentityCase sym = verify_real_structure(GaussPoly(y1 * y2 - phi * y0 * y0), second);
        sym.name += " (symmetric quartic)";
        return {torus, sym};
    }
    if (suite == "scaling") return {verify_scaling_invariance(generic_form(x_coords(), 4, "p"))};
    if (suite == "contact-conic") {
        const std::array<MultiPoly, 4> planes{
            MultiPoly::parse("x0 - 2*x1 + 2*x2 - 4*x3"), MultiPoly::parse("-3*x0 + 4*x1 - 3*x2 + x3"),
            MultiPoly::parse("4*x0 - 2*x1 - 3*x2 - x3"), MultiPoly::parse("-2*x0 + x1 - 2*x2 + 3*x3")};
        const std::array<std::vector<Scalar>, 3> plane{std::vector<Scalar>{1, 0, 2, -1}, std::vector<Scalar>{0, 1, 1, 3},
                                                       std::vector<Scalar>{2, -1, 0, 1}};
        return {verify_contact_conic(planes, quadric(), plane)};
    }
    throw std::invalid_argument("unknown identity suite: " + suite);
}

}  // namespace

std::vector<IdentityCase> suite_cases(const std::string& suite) {
    if (suite != "all") return cases_for(suite);
    std::vector<IdentityCase> out;
    for (std::size_t k = 1; k < suite_names().size(); ++k) {
        for (auto& c : cases_for(suite_names()[k])) out.push_back(std::move(c));
    }
    return out;
}

std::vector<IdentityReport> run_suite(const std::string& suite, unsigned threads) {
    std::vector<std::string> parts;
    if (suite == "all") {
        parts.assign(suite_names().begin() + 1, suite_names().end());
    } else {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
            throw std::invalid_argument("unknown identity suite: " + suite);
        }
        parts.push_back(suite);
    }
    const unsigned workers = worker_count(threads);
    std::vector<std::vector<IdentityReport>> results(parts.size());
    auto work = [&](std::size_t k) {
        for (const auto& c : cases_for(parts[k])) results[k].push_back(check(c));
    };
    if (workers <= 1) {
        for (std::size_t k = 0; k < parts.size(); ++k) work(k);
    } else {
        std::vector<std::future<void>> pending;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            pending.push_back(std::async(std::launch::async, work, k));
            if (pending.size() >= workers) {
                for (auto& f : pending) f.get();
                pending.clear();
            }
        }
        for (auto& f : pending) f.get();
    }
    std::vector<IdentityReport> out;
    for (auto& r : results)
        for (auto& x : r) out.push_back(std::move(x));
    return out;
}

}  // namespace nodal
