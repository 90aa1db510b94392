// Command-line front end. Exit codes: 0 pass, 1 residual failure, 2 input error.
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gaq/dynamics.hpp"
#include "gaq/errors.hpp"
#include "gaq/kg.hpp"
#include "gaq/lie.hpp"
#include "gaq/quantum.hpp"
#include "gaq/report.hpp"
#include "gaq/selftest.hpp"
#include "gaq/sigma.hpp"

using namespace gaq;

namespace {

struct Common {
    double tol = 1e-8;
    int samples = 16;
    std::uint64_t seed = 1;
    std::string json_path, csv_path;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--tol", c.tol, "Residual tolerance")->capture_default_str();
    app->add_option("--samples", c.samples, "Number of seeded sample points")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    app->add_option("--json", c.json_path, "Write the JSON report here as well as to standard output");
    app->add_option("--csv", c.csv_path, "Write a CSV trajectory or table here");
}

int emit(const Json& report, const Common& c, bool ok) {
    const std::string text = format_json(report);
    std::cout << text;
    if (!c.json_path.empty()) write_text_file(c.json_path, text);
    return ok ? 0 : 1;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ArgumentError("parameter '" + item + "' must read NAME=VALUE");
        std::size_t used = 0;
        const std::string value = item.substr(eq + 1);
        double v = 0.0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw ArgumentError("parameter value '" + value + "' is not a number");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    for (std::string item; std::getline(is, item, ',');) {
        std::size_t used = 0;
        try {
            out.push_back(std::stod(item, &used));
        } catch (const std::exception&) {
            throw ArgumentError("'" + item + "' is not a number");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw ArgumentError("'" + item + "' is not a number");
    }
    return out;
}

struct GroupSource {
    std::string file, catalog_key;
    std::vector<std::string> params;
};

void add_group_source(CLI::App* app, GroupSource& g) {
    app->add_option("file", g.file, "Group definition file");
    app->add_option("--catalog", g.catalog_key, "Catalog group key");
    app->add_option("--param", g.params, "Parameter binding NAME=VALUE (repeatable)");
}

LieGroup load_group(const GroupSource& g) {
    const auto params = parse_params(g.params);
    if (!g.catalog_key.empty() && !g.file.empty()) throw ArgumentError("give either a file or --catalog, not both");
    if (!g.catalog_key.empty()) {
        std::map<std::string, double> full = params;
        for (const auto& e : catalog_entries())
            if (e.key == g.catalog_key)
                for (const auto& p : e.required_params) full.emplace(p, 1.0);
        return catalog(g.catalog_key, full);
    }
    if (g.file.empty()) throw ArgumentError("no group given: pass a definition file or --catalog KEY");
    LieGroup G = LieGroup::from_definition(parse_group_file(read_text_file(g.file)), params);
    G.validate();
    return G;
}

Json vec_json(const Eigen::VectorXd& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

int run_analyze(const GroupSource& src, const Common& c) {
    const LieGroup G = load_group(src);
    const StructureTable T = structure_constants(G);
    const JacobiReport J = jacobi_residuals(T);
    const auto cls = classify_parameters(T, G.labels()[G.central()]);
    const InvarianceReport inv = invariance_suite(G, c.samples, c.seed);
    const auto& L = G.labels();

    Json constants = Json::array();
    for (std::size_t a = 0; a < G.dim(); ++a)
        for (std::size_t b = a + 1; b < G.dim(); ++b)
            for (std::size_t k = 0; k < G.dim(); ++k)
                if (std::abs(T(k, a, b)) > 1e-12)
                    constants.push_back({{"bracket", "[" + L[a] + "," + L[b] + "]"}, {"generator", L[k]}, {"value", T(k, a, b)}});

    std::mt19937_64 rng(c.seed);
    Json points = Json::array();
    std::size_t kernel_dim = 0;
    Json kernel_basis = Json::array();
    Json noether = Json::object();
    for (int s = 0; s < std::min(c.samples, 3); ++s) {
        const auto g = G.sample(rng);
        points.push_back({{"point", g}, {"theta", vec_json(theta(G, g))}});
        if (s == 0) {
            const auto ker = characteristic_kernel(G, g);
            kernel_dim = ker.basis.size();
            for (const auto& b : ker.basis) kernel_basis.push_back(vec_json(b));
            const Eigen::VectorXd F = noether_invariants(G, g);
            for (std::size_t a = 0; a < G.dim(); ++a) noether["F_" + L[a]] = F[static_cast<Eigen::Index>(a)];
        }
    }
    const bool ok = J.max_residual < c.tol && inv.max() < c.tol && T.closure_residual < c.tol &&
                    T.left_right_residual < c.tol && inv.skipped == 0;
    Json rep = {{"group", G.name()},
                {"dim", G.dim()},
                {"labels", L},
                {"structure_constants", constants},
                {"closure_residual", T.closure_residual},
                {"left_right_residual", T.left_right_residual},
                {"jacobi_max_residual", J.max_residual},
                {"classification",
                 {{"basic", cls.basic}, {"non_basic", cls.non_basic}, {"central", cls.central}}},
                {"characteristic_kernel", {{"dimension", kernel_dim}, {"basis", kernel_basis}, {"at", points[0]["point"]}}},
                {"invariance",
                 {{"lie_derivative_theta", inv.lie_derivative_theta},
                  {"volume_divergence", inv.volume_divergence},
                  {"left_right_commutator", inv.left_right_commutator},
                  {"skipped", inv.skipped}}},
                {"theta_samples", points},
                {"noether_invariants", noether},
                {"tol", c.tol},
                {"samples", c.samples},
                {"seed", c.seed},
                {"passed", ok}};
    return emit(rep, c, ok);
}

int run_flow(const GroupSource& src, const Common& c, const std::string& start, double t_final, double step) {
    const LieGroup G = load_group(src);
    std::vector<double> p0 = start.empty() ? G.identity() : parse_numbers(start);
    if (p0.size() != G.dim()) throw ArgumentError("--start needs " + std::to_string(G.dim()) + " values");
    const OdeTrajectory tr = flow_characteristic(G, p0, t_final, step);
    const ConservationReport cr = conservation_report(G, tr);
    if (!c.csv_path.empty()) {
        std::vector<std::string> header{"t"};
        for (const auto& l : G.labels()) header.push_back(l);
        for (const auto& l : G.labels()) header.push_back("F_" + l);
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < tr.states.size(); ++k) {
            std::vector<double> row{tr.times[k]};
            row.insert(row.end(), tr.states[k].begin(), tr.states[k].end());
            const Eigen::VectorXd F = noether_invariants(G, tr.states[k]);
            for (Eigen::Index a = 0; a < F.size(); ++a) row.push_back(F[a]);
            rows.push_back(std::move(row));
        }
        write_text_file(c.csv_path, csv_text(header, rows));
    }
    Json drift = Json::object();
    for (std::size_t a = 0; a < cr.labels.size(); ++a) drift[cr.labels[a]] = cr.drift[a];
    const bool ok = !tr.aborted && cr.max() < c.tol;
    Json rep = {{"group", G.name()}, {"start", p0},         {"t_final", t_final}, {"step", step},
                {"drift", drift},    {"max_drift", cr.max()}, {"tol", c.tol},     {"final", tr.states.back()},
                {"aborted", tr.aborted}, {"passed", ok}};
    if (tr.aborted) rep["error"] = tr.error;
    return emit(rep, c, ok);
}

int run_scenario(const std::string& kind, const std::string& field_file, const Common& c, double q, double m,
                 const std::string& start, double t_final, double step) {
    const FieldConfig cfg = parse_field_config(read_text_file(field_file));
    if ((kind == "em") != (cfg.kind == FieldKind4::em))
        throw ArgumentError("field file '" + field_file + "' does not hold " + kind + " potentials");
    const std::vector<double> y0 = start.empty() ? std::vector<double>{0, 0, 0, 1, 0, 0} : parse_numbers(start);
    if (y0.size() != 6) throw ArgumentError("--start needs x1,x2,x3,v1,v2,v3");
    const OdeField f = kind == "em" ? em_equations_of_motion(cfg, q, m) : gravity_equations_of_motion(cfg, m);
    const OdeTrajectory tr = rk4_integrate(f, y0, t_final, step);
    if (!c.csv_path.empty()) {
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < tr.states.size(); ++k) {
            std::vector<double> row{tr.times[k]};
            row.insert(row.end(), tr.states[k].begin(), tr.states[k].end());
            rows.push_back(std::move(row));
        }
        write_text_file(c.csv_path, csv_text({"t", "x1", "x2", "x3", "v1", "v2", "v3"}, rows));
    }
    Json rep = {{"scenario", kind}, {"field", field_file}, {"m", m},          {"t_final", t_final},
                {"step", step},     {"start", y0},         {"final", tr.states.back()}, {"aborted", tr.aborted}};
    if (kind == "em") rep["q"] = q;
    bool ok = !tr.aborted;
    if (kind == "gravity") {
        const GemReport g = gem_equivalence_check(cfg, c.samples, c.seed);
        Json conv = Json::array();
        for (const auto& cv : g.conventions) conv.push_back({{"label", cv.label()}, {"residual", cv.residual}});
        rep["gem"] = {{"chosen", g.best().label()}, {"conventions", conv}, {"unique", g.passed}, {"samples", c.samples},
                      {"seed", c.seed}};
        ok = ok && g.passed;
    }
    rep["passed"] = ok;
    return emit(rep, c, ok);
}

int run_jacobi(const std::string& file, const std::vector<std::string>& substitutions, const Common& c) {
    ParamStructureTable T = parse_algebra_file(read_text_file(file));
    Json subs = Json::object();
    for (const auto& s : substitutions) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ArgumentError("substitution '" + s + "' must read NAME=POLY");
        Scope scope;
        scope.params = T.params();
        scope.coords = T.labels();
        scope.allow_primed = false;
        const Polynomial value = to_polynomial(*parse_expression(s.substr(eq + 1), scope));
        T = T.substitute(s.substr(0, eq), value);
        subs[s.substr(0, eq)] = value.to_string();
    }
    const auto res = jacobi_residuals(T);
    Json items = Json::array();
    for (const auto& e : res)
        items.push_back({{"triple", {T.labels()[e.a], T.labels()[e.b], T.labels()[e.c]}},
                         {"generator", T.labels()[e.d]},
                         {"residual", e.value.to_string()}});
    Json rep = {{"algebra", T.name}, {"substitutions", subs}, {"nonzero", items}, {"passed", res.empty()}};
    return emit(rep, c, res.empty());
}

int run_kg(const Common& c, std::size_t N, double dx, double m, double cspeed, double b) {
    KGLattice L{N, dx, m, cspeed};
    L.validate();
    const KGFieldsReport fr = kg_group_fields(L);
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    KGState s;
    for (std::size_t i = 0; i < N; ++i) {
        s.phi.push_back(u(rng));
        s.phidot.push_back(u(rng));
    }
    const KGState moved = kg_time_translate(L, s, b);
    Json modes = Json::array();
    double charge = 0.0, det = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const cplx a0 = kg_noether_charge(L, s, j), a1 = kg_noether_charge(L, moved, j);
        const double phase = std::remainder(std::arg(a1 / a0) + L.c * L.omega(j) * b, 2.0 * M_PI);
        charge = std::max({charge, std::abs(std::abs(a1) - std::abs(a0)), std::abs(phase)});
        det = std::max(det, std::abs(kg_mode_map(L, j, b).determinant() - 1.0));
        modes.push_back({{"j", j}, {"k", L.k(j)}, {"omega", L.omega(j)}, {"abs_a", std::abs(a0)}});
    }
    if (!c.csv_path.empty()) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < N; ++i)
            rows.push_back({static_cast<double>(i) * dx, s.phi[i], s.phidot[i], moved.phi[i], moved.phidot[i]});
        write_text_file(c.csv_path, csv_text({"x", "phi", "phidot", "phi_b", "phidot_b"}, rows));
    }
    const double semi = kg_semi_invariance_residual(m, c.samples, c.seed);
    const bool ok = fr.max() < c.tol && charge < c.tol && det < c.tol && semi < c.tol;
    Json rep = {{"N", N},
                {"dx", dx},
                {"m", m},
                {"c", cspeed},
                {"b", b},
                {"fields",
                 {{"b_phi", fr.b_phi},
                  {"b_phidot", fr.b_phidot},
                  {"central", fr.central},
                  {"central_sign", fr.central_sign},
                  {"nested", fr.nested},
                  {"stray", fr.stray}}},
                {"mode_det", det},
                {"charge_residual", charge},
                {"semi_invariance", semi},
                {"modes", modes},
                {"tol", c.tol},
                {"samples", c.samples},
                {"seed", c.seed},
                {"passed", ok}};
    return emit(rep, c, ok);
}

int run_nlsm(const Common& c, std::size_t N, double dx, const std::string& lambda, double amplitude, double t_final,
             double step) {
    SigmaLattice L;
    L.N = N;
    L.dx = dx;
    const auto lam = parse_numbers(lambda);
    if (lam.size() != 3) throw ArgumentError("--lambda needs three components");
    L.lambda = {lam[0], lam[1], lam[2]};
    L.validate();
    const SigmaState s0 = sigma_random_state(L, c.seed, amplitude);
    const SigmaRun run = sigma_evolve(s0, L, t_final, step);
    if (!c.csv_path.empty()) {
        std::vector<std::string> header{"t"};
        for (const char* f : {"S", "L"})
            for (std::size_t i = 0; i < N; ++i)
                for (int a = 1; a <= 3; ++a) header.push_back(std::string(f) + "_" + std::to_string(i) + "_" + std::to_string(a));
        header.push_back("H");
        for (int a = 1; a <= 3; ++a) header.push_back("totalL_" + std::to_string(a));
        for (std::size_t i = 0; i < N; ++i) header.push_back("casimir_" + std::to_string(i));
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < run.trajectory.states.size(); ++k) {
            const State& y = run.trajectory.states[k];
            const SigmaState s = sigma_unflatten(y, N);
            std::vector<double> row{run.trajectory.times[k]};
            row.insert(row.end(), y.begin(), y.end());
            row.push_back(sigma_hamiltonian(s, L));
            for (double v : total_L(s, L)) row.push_back(v);
            for (double v : casimirs(s, L)) row.push_back(v);
            rows.push_back(std::move(row));
        }
        write_text_file(c.csv_path, csv_text(header, rows));
    }
    const SigmaFieldsReport fr = sigma_local_group_fields(SigmaLattice{std::min<std::size_t>(N, 2), dx, L.lambda});
    const bool ok = run.drift.max() < c.tol && fr.max() < c.tol;
    Json rep = {{"N", N},
                {"dx", dx},
                {"lambda", lam},
                {"amplitude", amplitude},
                {"t_final", t_final},
                {"step", step},
                {"crosscheck", run.crosscheck},
                {"drift",
                 {{"hamiltonian", run.drift.hamiltonian}, {"total_L", run.drift.total_L}, {"casimir", run.drift.casimir}}},
                {"local_group_fields",
                 {{"sites", std::min<std::size_t>(N, 2)},
                  {"phi_phi", fr.phi_phi},
                  {"phi_theta", fr.phi_theta},
                  {"central", fr.central},
                  {"theta_theta", fr.theta_theta},
                  {"stray", fr.stray}}},
                {"tol", c.tol},
                {"seed", c.seed},
                {"passed", ok}};
    return emit(rep, c, ok);
}

int run_su2(const Common& c, double kk_sign) {
    const BracketCheck b = bracket_table_check(so32_bracket_table(kk_sign), c.samples, c.seed);
    const bool ok = b.max_residual < c.tol;
    Json rep = {{"kk_sign", kk_sign}, {"max_residual", b.max_residual}, {"worst", b.worst},
                {"samples", b.samples}, {"seed", c.seed}, {"tol", c.tol}, {"passed", ok}};
    return emit(rep, c, ok);
}

int run_ads(const Common& c, const std::string& states, const std::string& phase, const std::string& reading, double m,
            double xi) {
    AdsParams p;
    p.m = m;
    p.xi = xi;
    const AdsPhase ph = phase == "printed" ? AdsPhase::printed : AdsPhase::global_time;
    const AdsReading rd = reading == "literal" ? AdsReading::literal : AdsReading::dimensional;
    const AdsConsistencyReport r = ads_eigen_consistency(p, parse_state_list(states), c.samples, c.seed, c.tol, ph, rd);
    Json signs = Json::array();
    for (const auto& s : r.signs) {
        Json st = Json::array();
        for (const auto& x : s.states)
            st.push_back({{"state", {x.n, x.l, x.mz}},
                          {"lambda", x.lambda},
                          {"mean", {x.mean.real(), x.mean.imag()}},
                          {"variance", x.variance},
                          {"ratio", x.ratio}});
        signs.push_back({{"cross_sign", s.cross_sign}, {"states", st}});
    }
    Json rep = {{"phase", phase}, {"reading", reading}, {"m", m},       {"xi", xi},
                {"signs", signs}, {"passing_sign", r.passing_sign}, {"tol", c.tol}, {"samples", c.samples},
                {"seed", c.seed}, {"passed", r.passed}};
    return emit(rep, c, r.passed);
}

int run_selftest_cmd(const Common& c, const std::string& filter) {
    const SelftestSummary s = run_selftest(filter, &std::cout);
    if (s.results.empty()) std::cerr << "warning: no criterion matches '" << filter << "'\n";
    if (!c.json_path.empty()) write_text_file(c.json_path, format_json(summary_json(s, true)));
    return s.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group-approach-to-quantization workbench"};
    app.require_subcommand(1);
    Common c;

    GroupSource analyze_src;
    auto* analyze = app.add_subcommand("analyze", "Structure constants, Theta, kernel and invariance residuals of a group");
    add_group_source(analyze, analyze_src);
    add_common(analyze, c);

    GroupSource flow_src;
    std::string flow_start;
    double t_final = 10.0, step = 1e-3;
    auto* flow = app.add_subcommand("flow", "Integrate the characteristic flow and report Noether drift");
    add_group_source(flow, flow_src);
    flow->add_option("--start", flow_start, "Comma-separated starting point (default identity)");
    flow->add_option("--t-final", t_final)->capture_default_str();
    flow->add_option("--step", step)->capture_default_str()->check(CLI::PositiveNumber);
    add_common(flow, c);

    std::string scen_kind, scen_file, scen_start;
    double q = 1.0, m = 1.0;
    auto* scenario = app.add_subcommand("scenario", "Charged or gravitating particle in a field configuration");
    scenario->add_option("kind", scen_kind, "em or gravity")->required()->check(CLI::IsMember({"em", "gravity"}));
    scenario->add_option("field", scen_file, "Field configuration file")->required();
    scenario->add_option("--q", q)->capture_default_str();
    scenario->add_option("--m", m)->capture_default_str();
    scenario->add_option("--start", scen_start, "x1,x2,x3,v1,v2,v3");
    double scen_t = 1.0;
    scenario->add_option("--t-final", scen_t)->capture_default_str();
    scenario->add_option("--step", step)->capture_default_str()->check(CLI::PositiveNumber);
    add_common(scenario, c);

    std::string alg_file;
    std::vector<std::string> subs;
    auto* jac = app.add_subcommand("jacobi", "Exact Jacobi residuals of a parameterized algebra");
    jac->add_option("file", alg_file, "Algebra file")->required();
    jac->add_option("--subst", subs, "Substitution NAME=POLY (repeatable)");
    add_common(jac, c);

    std::size_t N = 8;
    double dx = 1.0, kg_m = 1.0, kg_c = 1.0, b = 0.5;
    auto* kg = app.add_subcommand("kg", "Klein-Gordon lattice group fields, charges and semi-invariance");
    kg->add_option("--sites,--N", N)->capture_default_str()->check(CLI::Range(1, 64));
    kg->add_option("--dx", dx)->capture_default_str();
    kg->add_option("--mass", kg_m)->capture_default_str();
    kg->add_option("--c", kg_c)->capture_default_str();
    kg->add_option("--b", b, "Time translation applied to the seeded state")->capture_default_str();
    add_common(kg, c);

    std::string lambda = "0,0,1";
    double amplitude = 2.0;
    auto* nlsm = app.add_subcommand("nlsm", "Lattice sigma model evolution and local group check");
    nlsm->add_option("--sites,--N", N)->capture_default_str()->check(CLI::Range(1, 256));
    nlsm->add_option("--dx", dx)->capture_default_str();
    nlsm->add_option("--lambda", lambda)->capture_default_str();
    nlsm->add_option("--amplitude", amplitude)->capture_default_str();
    double nlsm_t = 1.0;
    nlsm->add_option("--t-final", nlsm_t)->capture_default_str();
    nlsm->add_option("--step", step)->capture_default_str()->check(CLI::PositiveNumber);
    add_common(nlsm, c);

    double kk_sign = -1.0;
    auto* su2 = app.add_subcommand("su2", "SO(3,2) bracket table on the SU(2) particle phase space");
    su2->add_option("--kk-sign", kk_sign, "-1 anti-de Sitter, +1 de Sitter")->capture_default_str();
    add_common(su2, c);

    std::string states = "0,0,0;1,0,0;0,1,0", phase = "printed", reading = "literal";
    double ads_m = 0.0, xi = 0.0;
    auto* ads = app.add_subcommand("ads", "AdS eigenfunction consistency");
    ads->add_option("--states", states, "n,l,m;n,l,m;...")->capture_default_str();
    ads->add_option("--phase", phase)->capture_default_str()->check(CLI::IsMember({"printed", "global_time"}));
    ads->add_option("--reading", reading)->capture_default_str()->check(CLI::IsMember({"literal", "dimensional"}));
    ads->add_option("--mass", ads_m)->capture_default_str();
    ads->add_option("--xi", xi)->capture_default_str();
    add_common(ads, c);

    std::string filter;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--filter", filter, "Run only criteria whose key or title contains this text");
    add_common(selftest, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return run_analyze(analyze_src, c);
        if (*flow) return run_flow(flow_src, c, flow_start, t_final, step);
        if (*scenario) return run_scenario(scen_kind, scen_file, c, q, m, scen_start, scen_t, step);
        if (*jac) return run_jacobi(alg_file, subs, c);
        if (*kg) return run_kg(c, N, dx, kg_m, kg_c, b);
        if (*nlsm) return run_nlsm(c, N, dx, lambda, amplitude, nlsm_t, step);
        if (*su2) return run_su2(c, kk_sign);
        if (*ads) return run_ads(c, states, phase, reading, ads_m, xi);
        if (*selftest) return run_selftest_cmd(c, filter);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ArgumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
