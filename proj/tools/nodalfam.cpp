#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nodal/io.hpp"

using namespace nodal;

namespace {

struct RunConfig {
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::string out;
    std::string format = "json";
};

/// Usage or input error: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string text;
    int code = 0;
};

MultiPoly X(const char* s) { return MultiPoly::parse(s, x_coords()); }

std::array<MultiPoly, 4> default_tetrahedron() {
    return {X("x0 - 2*x1 + 2*x2 - 4*x3"), X("-3*x0 + 4*x1 - 3*x2 + x3"), X("4*x0 - 2*x1 - 3*x2 - x3"),
            X("-2*x0 + x1 - 2*x2 + 3*x3")};
}

FamilySpec builtin_family(const std::string& name) {
    const auto T = default_tetrahedron();
    if (name == "tetrahedral") return {TetrahedralParams{T}};
    if (name == "thirteenth") return {ThirteenthParams{{T[0], T[1], T[2]}, {1, 2, 3, 1}}};
    if (name == "fourteen") {
        FourteenNodalParams p;
        p.a0 = 1, p.a1 = 2, p.b0 = 1, p.b1 = 3;
        p.K1 = X("x0 - x3");
        p.K2 = X("x0 + x1 - x2");
        p.alpha1 = Scalar(1, 10);
        p.alpha2 = Scalar(1, 10);
        return {p};
    }
    if (name == "torus") {
        TorusParams t;
        t.A = {1, Scalar(7, 2), Scalar(7, 2), 1};
        return {t};
    }
    throw UsageError("unknown family \"" + name + "\"");
}

FamilySpec read_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return family_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string csv_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Output cmd_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<IdentityReport> reports;
    try {
        reports = run_suite(suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    std::string text;
    if (cfg.format == "csv") {
        text = "name,status,anchor\n";
        for (const auto& r : reports) text += r.name + "," + r.status() + ",\"" + r.anchor + "\"\n";
    } else {
        Json a = Json::array();
        for (const auto& r : reports) a.push_back(identity_json(r));
        text = dump(a);
    }
    return {text, ok ? 0 : 1};
}

Output cmd_nodes(const RunConfig& cfg, const FamilySpec& spec) {
    const double tol = cfg.tol.value_or(1e-8);
    std::vector<SingularPointRecord> recs;
    MultiPoly F;
    if (const auto* t = std::get_if<TetrahedralParams>(&spec.params)) {
        recs = structural_nodes_tetrahedral(quadric(), t->planes);
        F = quadric() * quadric() - t->planes[0] * t->planes[1] * t->planes[2] * t->planes[3];
    } else if (const auto* t = std::get_if<ThirteenthParams>(&spec.params)) {
        const MultiPoly K = t->planes[0] * t->planes[1] * t->planes[2];
        const Scalar aa = alpha_product_for_point(K, t->point);
        const MultiPoly L = l_from_point(K, aa, t->point);
        recs = structural_nodes_tetrahedral(quadric(), {t->planes[0], t->planes[1], t->planes[2], L}, Scalar(4) * aa);
        F = branch_quartic(K, L, aa);
        auto extra = verify_singular(F, t->point);
        extra.origin = "blow-up point";
        recs.push_back(extra);
    } else if (const auto* p = std::get_if<FourteenNodalParams>(&spec.params)) {
        const auto fam = fourteen_nodal_family(*p);
        recs = structural_nodes_fourteen(fourteen_nodal_tropes(fam), fam.quartic);
        F = fam.quartic;
    } else {
        throw UsageError("nodes supports the tetrahedral, thirteenth and fourteen families");
    }
    NumericSearchConfig nc;
    nc.seed = cfg.seed;
    nc.tol = tol;
    const auto found = numeric_singular_search(F, nc);
    const CensusAgreement agree = compare_census(recs, found, tol);
    bool all_a1 = true;
    for (const auto& r : recs) all_a1 = all_a1 && r.classification == NodeClass::A1_node;

    std::string text;
    if (cfg.format == "csv") {
        text = "provenance,origin,classification,hessian_rank,gradient_residual,conjugate_pair,point\n";
        auto rows = [&](const std::vector<SingularPointRecord>& v, const char* prov) {
            for (const auto& r : v) {
                std::string pt;
                for (std::size_t i = 0; i < 4; ++i) {
                    if (i) pt += " ";
                    pt += r.exact ? r.point[i].str()
                                  : csv_double(r.approx[i].real()) + (r.approx[i].imag() < 0 ? "" : "+") +
                                        csv_double(r.approx[i].imag()) + "i";
                }
                text += std::string(prov) + ",\"" + r.origin + "\"," + to_string(r.classification) + "," +
                        std::to_string(r.hessian_rank) + "," + csv_double(r.gradient_residual) + "," +
                        (r.conjugate_pair ? "1" : "0") + "," + pt + "\n";
            }
        };
        rows(recs, "structural");
        rows(found, "numeric");
    } else {
        Json s = Json::array(), n = Json::array();
        for (const auto& r : recs) s.push_back(record_json(r, "structural"));
        for (const auto& r : found) n.push_back(record_json(r, "numeric"));
        Json j = family_json(spec);
        j["seed"] = cfg.seed;
        j["tol"] = tol;
        j["starts_per_chart"] = nc.starts;
        j["quartic"] = F.str();
        j["count"] = count_distinct(recs);
        j["all_A1"] = all_a1;
        j["structural"] = s;
        j["numeric"] = n;
        j["agreement"] = agreement_json(agree);
        text = dump(j);
    }
    return {text, agree.agree ? 0 : 1};
}

Output cmd_torus(const RunConfig& cfg, const TorusParams& t, const std::string& action) {
    const double tol = cfg.tol.value_or(1e-12);
    const LocusCurve c = torus_locus(t.A);
    Json j{{"A", Json::array()}, {"action", action}};
    for (const auto& a : t.A) j["A"].push_back(scalar_json(a));
    std::string csv;
    if (action == "locus") {
        j["s"] = rational_json(c.s);
        j["alpha_product"] = rational_json(c.alpha_product);
        const LocusCurve closed = torus_locus_closed_form(t.A);
        j["matches_closed_form"] = closed.s == c.s && closed.alpha_product == c.alpha_product;
        csv = "quantity,numerator,denominator\n";
        csv += "s," + c.s.numerator().str() + "," + c.s.denominator().str() + "\n";
        csv += "alpha_product," + c.alpha_product.numerator().str() + "," + c.alpha_product.denominator().str() + "\n";
    } else if (action == "cusps") {
        const CuspReport r = find_cusps(c, -5, 5, tol);
        j["interval"] = Json::array({-5, 5});
        j["cusps"] = Json::array();
        csv = "t,s,alpha_product\n";
        for (double x : r.t) {
            const double s = static_cast<double>(c.s.eval(x)), aa = static_cast<double>(c.alpha_product.eval(x));
            j["cusps"].push_back(Json{{"t", x}, {"s", s}, {"alpha_product", aa}});
            csv += csv_double(x) + "," + csv_double(s) + "," + csv_double(aa) + "\n";
        }
        j["complex_count"] = r.complex_count;
    } else if (action == "doublepoints") {
        const DoublePointReport r = find_double_points(c, tol);
        j["real"] = Json::array();
        csv = "t1,t2,s,alpha_product\n";
        for (const auto& d : r.real) {
            j["real"].push_back(Json{{"t1", d.t1}, {"t2", d.t2}, {"s", d.s}, {"alpha_product", d.alpha_product}});
            csv += csv_double(d.t1) + "," + csv_double(d.t2) + "," + csv_double(d.s) + "," +
                   csv_double(d.alpha_product) + "\n";
        }
        j["complex_pairs"] = r.complex_pairs;
    } else if (action == "plot") {
        j["windows"] = Json::array();
        csv = "window,t,s,alpha_product,segment_id,marked\n";
        for (const auto& w : default_plot_windows()) {
            Json rows = Json::array();
            for (const auto& row : emit_plot(c, w)) {
                bool marked = false;
                for (double m : w.marked) marked = marked || row.t == m;
                rows.push_back(Json{{"t", row.t},
                                    {"s", row.s},
                                    {"alpha_product", row.alpha_product},
                                    {"segment", row.segment},
                                    {"marked", marked}});
                csv += w.name + "," + csv_double(row.t) + "," + csv_double(row.s) + "," +
                       csv_double(row.alpha_product) + "," + std::to_string(row.segment) + "," +
                       (marked ? "1" : "0") + "\n";
            }
            j["windows"].push_back(Json{{"name", w.name},
                                        {"s_range", Json::array({w.s_range.first, w.s_range.second})},
                                        {"alpha_range", Json::array({w.alpha_range.first, w.alpha_range.second})},
                                        {"rows", rows}});
        }
    } else {
        throw UsageError("unknown torus action \"" + action + "\"");
    }
    return {cfg.format == "csv" ? csv : dump(j), 0};
}

std::string invariants_csv(const std::vector<Json>& rows) {
    std::string text;
    for (const auto& [k, v] : rows.front().items()) text += (text.empty() ? "" : ",") + k;
    text += "\n";
    for (const auto& r : rows) {
        std::string line;
        for (const auto& [k, v] : r.items()) line += (line.empty() ? "" : ",") + v.dump();
        text += line + "\n";
    }
    return text;
}

Output cmd_invariants(const RunConfig& cfg, const InvariantInput& i) {
    const Json j = invariants_json(i);
    return {cfg.format == "csv" ? invariants_csv({j}) : dump(j), 0};
}

Output cmd_twistor(const RunConfig& cfg, long lo, long hi) {
    if (lo < 3 || hi < lo) throw UsageError("twistor table needs 3 <= n-min <= n-max");
    std::vector<Json> rows;
    for (long n = lo; n <= hi; ++n) rows.push_back(invariants_json(twistor_input(n)));
    if (cfg.format == "csv") return {invariants_csv(rows), 0};
    Json a = Json::array();
    for (auto& r : rows) a.push_back(r);
    return {dump(Json{{"twistor", a}}), 0};
}

Scalar parse_scalar(const std::string& s) {
    try {
        return Scalar::parse(s);
    } catch (const std::exception&) {
        throw UsageError("bad scalar \"" + s + "\"");
    }
}

std::vector<Scalar> parse_list(const std::string& s, std::size_t size) {
    std::vector<Scalar> v;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_scalar(item));
    if (v.size() != size) throw UsageError("expected " + std::to_string(size) + " comma-separated scalars: " + s);
    return v;
}

void write(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nodal quartic families: identity checks, node censuses, torus-example dual curves, invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    double tol = 0;
    app.add_option("--seed", cfg.seed, "Seed for randomized searches")->capture_default_str();
    auto* tol_opt = app.add_option("--tol", tol, "Tolerance override");
    app.add_option("--out", cfg.out, "Write output to a file instead of stdout");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "Suite name")->capture_default_str();

    auto* nodes = app.add_subcommand("nodes", "Structural node census with the Newton cross-check");
    std::string family, params;
    auto* fam_opt = nodes->add_option("--family", family, "Built-in instance: tetrahedral, thirteenth, fourteen");
    auto* par_opt = nodes->add_option("--params", params, "Family JSON file")->check(CLI::ExistingFile);
    fam_opt->excludes(par_opt);
    nodes->require_option(1);

    auto* torus = app.add_subcommand("torus", "Dual-curve computations for the torus example");
    std::string action, A, factors, torus_params;
    torus->add_option("action", action, "locus, cusps, doublepoints or plot")
        ->required()
        ->check(CLI::IsMember({"locus", "cusps", "doublepoints", "plot"}));
    auto* a_opt = torus->add_option("--A", A, "A0,A1,A2,A3");
    auto* f_opt = torus->add_option("--factors", factors, "a1,a2,a3:b1,b2,b3");
    auto* tp_opt = torus->add_option("--params", torus_params, "Torus family JSON file")->check(CLI::ExistingFile);
    a_opt->excludes(f_opt)->excludes(tp_opt);
    f_opt->excludes(tp_opt);

    auto* inv = app.add_subcommand("invariants", "Dimension formulas for a discriminant curve");
    InvariantInput in;
    bool twistor = false;
    long n_min = 3, n_max = 6;
    auto* n_opt = inv->add_option("--n", in.n, "Bidegree");
    auto* d_opt = inv->add_option("--delta", in.delta, "Total delta invariant");
    auto* g_opt = inv->add_option("--g", in.g, "Geometric genus");
    auto* r_opt = inv->add_option("--r", in.r, "Number of components");
    inv->add_flag("--symmetric", in.symmetric, "The curve has a 1-dimensional symmetry group");
    auto* tw_opt = inv->add_flag("--twistor", twistor, "Print the twistor table g = 0, r = n");
    inv->add_option("--n-min", n_min, "First n of the twistor table")->capture_default_str();
    inv->add_option("--n-max", n_max, "Last n of the twistor table")->capture_default_str();
    for (auto* o : {n_opt, d_opt, g_opt, r_opt}) tw_opt->excludes(o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (tol_opt->count() > 0) cfg.tol = tol;

    try {
        Output out;
        if (*verify) {
            out = cmd_verify(cfg, suite);
        } else if (*nodes) {
            const FamilySpec spec = params.empty() ? builtin_family(family) : read_family(params);
            std::cerr << "nodalfam: seed " << cfg.seed << "\n";
            out = cmd_nodes(cfg, spec);
        } else if (*torus) {
            TorusParams t = std::get<TorusParams>(builtin_family("torus").params);
            if (!A.empty()) {
                const auto v = parse_list(A, 4);
                std::copy(v.begin(), v.end(), t.A.begin());
            } else if (!factors.empty()) {
                const auto colon = factors.find(':');
                if (colon == std::string::npos) throw UsageError("--factors needs a1,a2,a3:b1,b2,b3");
                const auto a = parse_list(factors.substr(0, colon), 3), b = parse_list(factors.substr(colon + 1), 3);
                t = TorusParams::from_factors({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
            } else if (!torus_params.empty()) {
                const FamilySpec spec = read_family(torus_params);
                const auto* p = std::get_if<TorusParams>(&spec.params);
                if (p == nullptr) throw UsageError("torus needs a torus family file");
                t = *p;
            }
            out = cmd_torus(cfg, t, action);
        } else if (*inv) {
            if (twistor) {
                out = cmd_twistor(cfg, n_min, n_max);
            } else {
                for (auto* o : {n_opt, d_opt, g_opt, r_opt}) {
                    if (o->count() == 0) throw UsageError("invariants needs --n, --delta, --g and --r");
                }
                out = cmd_invariants(cfg, in);
            }
        }
        write(cfg, out.text);
        return out.code;
    } catch (const UsageError& e) {
        std::cerr << "nodalfam: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "nodalfam: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "nodalfam: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "nodalfam: " << e.what() << "\n";
        return 1;
    }
}
