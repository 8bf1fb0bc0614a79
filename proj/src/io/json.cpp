#include "nodal/io.hpp"

#include <stdexcept>

namespace nodal {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

MultiPoly poly_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("polynomial must be a string");
    return MultiPoly::parse(j.get<std::string>());
}

MultiPoly x_form(const Json& j) { return MultiPoly::parse(j.get<std::string>(), x_coords()); }

std::vector<Scalar> scalars(const Json& j, std::size_t size) {
    if (!j.is_array() || j.size() != size) {
        throw std::invalid_argument("expected an array of " + std::to_string(size) + " scalars");
    }
    std::vector<Scalar> v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

template <std::size_t N>
std::array<MultiPoly, N> planes(const Json& j) {
    if (!j.is_array() || j.size() != N) throw std::invalid_argument("expected " + std::to_string(N) + " planes");
    std::array<MultiPoly, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        if (!j[i].is_string()) throw std::invalid_argument("plane must be a string");
        out[i] = x_form(j[i]);
    }
    return out;
}

Json scalar_array(const std::vector<Scalar>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(scalar_json(s));
    return a;
}

Json complex_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw std::invalid_argument("scalar must be a \"p/q\" string or an integer");
}

std::string FamilySpec::family() const {
    return std::visit(overloaded{[](const TetrahedralParams&) { return "tetrahedral"; },
                                 [](const ThirteenthParams&) { return "thirteenth"; },
                                 [](const FourteenNodalParams&) { return "fourteen"; },
                                 [](const TorusParams&) { return "torus"; },
                                 [](const KummerParams&) { return "kummer"; }},
                      params);
}

FamilySpec family_from_json(const Json& j) {
    const Json& fam = field(j, "family");
    const Json& p = field(j, "params");
    if (!fam.is_string()) throw std::invalid_argument("family must be a string");
    const std::string name = fam.get<std::string>();
    if (name == "tetrahedral") return {TetrahedralParams{planes<4>(field(p, "planes"))}};
    if (name == "thirteenth") return {ThirteenthParams{planes<3>(field(p, "planes")), scalars(field(p, "point"), 4)}};
    if (name == "fourteen") {
        FourteenNodalParams f;
        const auto a = scalars(field(p, "a"), 2), b = scalars(field(p, "b"), 2);
        f.a0 = a[0], f.a1 = a[1], f.b0 = b[0], f.b1 = b[1];
        f.lambda = scalar_from_json(field(p, "lambda"));
        f.mu = scalar_from_json(field(p, "mu"));
        f.K1 = x_form(field(p, "K1"));
        f.K2 = x_form(field(p, "K2"));
        f.alpha1 = scalar_from_json(field(p, "alpha1"));
        f.alpha2 = scalar_from_json(field(p, "alpha2"));
        return {f};
    }
    if (name == "torus") {
        TorusParams t;
        if (p.contains("A") == p.contains("factors")) throw std::invalid_argument("torus needs exactly one of A, factors");
        if (p.contains("A")) {
            const auto A = scalars(p.at("A"), 4);
            std::copy(A.begin(), A.end(), t.A.begin());
        } else {
            const Json& f = p.at("factors");
            const auto a = scalars(field(f, "a"), 3), b = scalars(field(f, "b"), 3);
            t = TorusParams::from_factors({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
        }
        if (p.contains("s")) t.s = scalar_from_json(p.at("s"));
        if (p.contains("alpha1")) t.alpha1 = scalar_from_json(p.at("alpha1"));
        if (p.contains("alpha2")) t.alpha2 = scalar_from_json(p.at("alpha2"));
        return {t};
    }
    if (name == "kummer") {
        KummerParams k;
        k.alpha1 = poly_from_json(field(p, "alpha1"));
        k.alpha2 = poly_from_json(field(p, "alpha2"));
        k.a0 = poly_from_json(field(p, "a0"));
        k.a1 = poly_from_json(field(p, "a1"));
        k.b0 = poly_from_json(field(p, "b0"));
        k.b1 = poly_from_json(field(p, "b1"));
        if (p.contains("eliminate_c")) k.eliminate_c = p.at("eliminate_c").get<bool>();
        return {k};
    }
    throw std::invalid_argument("unknown family \"" + name + "\"");
}

Json family_json(const FamilySpec& f) {
    Json p = std::visit(
        overloaded{[](const TetrahedralParams& t) {
                       Json a = Json::array();
                       for (const auto& l : t.planes) a.push_back(l.str());
                       return Json{{"planes", a}};
                   },
                   [](const ThirteenthParams& t) {
                       Json a = Json::array();
                       for (const auto& l : t.planes) a.push_back(l.str());
                       return Json{{"planes", a}, {"point", scalar_array(t.point)}};
                   },
                   [](const FourteenNodalParams& q) {
                       return Json{{"a", scalar_array({q.a0, q.a1})},
                                   {"b", scalar_array({q.b0, q.b1})},
                                   {"lambda", scalar_json(q.lambda)},
                                   {"mu", scalar_json(q.mu)},
                                   {"K1", q.K1.str()},
                                   {"K2", q.K2.str()},
                                   {"alpha1", scalar_json(q.alpha1)},
                                   {"alpha2", scalar_json(q.alpha2)}};
                   },
                   [](const TorusParams& t) {
                       return Json{{"A", scalar_array({t.A.begin(), t.A.end()})},
                                   {"s", scalar_json(t.s)},
                                   {"alpha1", scalar_json(t.alpha1)},
                                   {"alpha2", scalar_json(t.alpha2)}};
                   },
                   [](const KummerParams& k) {
                       return Json{{"alpha1", k.alpha1.str()}, {"alpha2", k.alpha2.str()}, {"a0", k.a0.str()},
                                   {"a1", k.a1.str()},         {"b0", k.b0.str()},         {"b1", k.b1.str()},
                                   {"eliminate_c", k.eliminate_c}};
                   }},
        f.params);
    return Json{{"family", f.family()}, {"params", p}};
}

Json record_json(const SingularPointRecord& r, const std::string& provenance) {
    Json approx = Json::array();
    for (const auto& z : r.approx) approx.push_back(complex_json(z));
    Json j{{"provenance", provenance}, {"exact", r.exact}};
    j["point"] = r.exact ? scalar_array(r.point) : Json(nullptr);
    j["approx"] = approx;
    j["gradient_residual"] = r.gradient_residual;
    j["hessian_rank"] = r.hessian_rank;
    j["classification"] = to_string(r.classification);
    j["conjugate_pair"] = r.conjugate_pair;
    j["snapped"] = r.snapped;
    j["origin"] = r.origin;
    return j;
}

Json agreement_json(const CensusAgreement& a) {
    return Json{{"agree", a.agree},
                {"matched", a.matched},
                {"unmatched_expected", a.unmatched_expected},
                {"unmatched_found", a.unmatched_found}};
}

Json identity_json(const IdentityReport& r) {
    return Json{{"name", r.name}, {"anchor", r.anchor}, {"status", r.status()}, {"witness", r.witness.str()}};
}

Json rational_json(const RationalFunction& f) {
    return Json{{"numerator", f.numerator().str()}, {"denominator", f.denominator().str()}};
}

Json invariants_json(const InvariantInput& i) {
    const ModuliDimensions d = moduli_dimensions(i);
    return Json{{"n", i.n},
                {"delta", i.delta},
                {"g", i.g},
                {"r", i.r},
                {"symmetric", i.symmetric},
                {"admissible", delta_genus_check(i)},
                {"h1_minus_h0_W", d.h1_minus_h0_W},
                {"h1_minus_h0_Z", d.h1_minus_h0_Z},
                {"dim_triples", d.dim_triples},
                {"h0", d.h0},
                {"chi_normal_bundle", chi_normal_bundle(i)},
                {"kernel_codimension", kernel_codimension(i.n)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nodal
