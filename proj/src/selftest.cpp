#include "gaq/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "gaq/dynamics.hpp"
#include "gaq/kg.hpp"
#include "gaq/lie.hpp"
#include "gaq/quantum.hpp"
#include "gaq/sigma.hpp"

namespace gaq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double wrap_angle(double a) { return std::remainder(a, 2.0 * std::numbers::pi); }

constexpr const char* kContractedGravity = R"(algebra gravity_contracted
params m c g
basis t x v h00 h0x phi
central phi
C[v,x,phi] = m*c
C[t,h0x,x] = 1
C[v,t,x] = -1
C[x,h0x,phi] = -g
C[t,h00,phi] = g
)";

constexpr const char* kGravityField = R"(h00 = 0.3*x*y - 0.2*z^2 + 0.1*t*x
h1 = 0.5*y + 0.2*x*z
h2 = -0.4*x + 0.1*t*z
h3 = 0.3*x*y + 0.2*t
)";

CriterionOutcome galilei_constants() {
    const auto t0 = Clock::now();
    const LieGroup G = catalog("galilei_ext_1p1", {{"m", 1.0}, {"hbar", 1.0}});
    const StructureTable T = structure_constants(G);
    const std::size_t t = G.index_of("t"), x = G.index_of("x"), v = G.index_of("v"), phi = G.index_of("phi");
    double worst = 0.0;
    for (std::size_t c = 0; c < G.dim(); ++c)
        for (std::size_t a : {t, x, v})
            for (std::size_t b : {t, x, v}) {
                double want = 0.0;
                if (c == x && a == t && b == v) want = 1.0;
                if (c == x && a == v && b == t) want = -1.0;
                if (c == phi && a == x && b == v) want = -1.0;
                if (c == phi && a == v && b == x) want = 1.0;
                worst = std::max(worst, std::abs(T(c, a, b) - want));
            }
    const double secs = seconds_since(t0);
    CriterionOutcome o;
    o.passed = worst < 1e-10 && secs < 1.0;
    o.detail = fmt("residual %.3g (tol 1e-10), C^x_{t,v} = %.17g, C^phi_{x,v} = %.17g, %.3f s (limit 1 s)", worst,
                   T(x, t, v), T(phi, x, v), secs);
    o.metrics = {{"residual", worst}, {"C_x_tv", T(x, t, v)}, {"C_phi_xv", T(phi, x, v)}, {"tol", 1e-10}};
    return o;
}

CriterionOutcome identity_suite() {
    const auto t0 = Clock::now();
    const LieGroup gal = catalog("galilei_ext_1p1", {{"m", 1.0}, {"hbar", 1.0}});
    const LieGroup em = catalog("galilei_em_3p1", {{"m", 1.0}, {"q", 1.0}, {"hbar", 1.0}});
    const InvarianceReport a = invariance_suite(gal, 32, 3);
    const InvarianceReport b = invariance_suite(em, 32, 3);
    const double secs = seconds_since(t0);
    const double worst = std::max(a.max(), b.max());
    CriterionOutcome o;
    o.passed = worst < 1e-8 && a.skipped == 0 && b.skipped == 0 && secs < 5.0;
    o.detail = fmt("galilei %.3g, em %.3g (tol 1e-8, 32 points, skipped %d/%d), %.2f s (limit 5 s)", a.max(), b.max(),
                   a.skipped, b.skipped, secs);
    for (const auto& [name, r] : {std::pair{"galilei_ext_1p1", a}, std::pair{"galilei_em_3p1", b}})
        o.metrics[name] = {{"lie_derivative_theta", r.lie_derivative_theta},
                           {"volume_divergence", r.volume_divergence},
                           {"left_right_commutator", r.left_right_commutator},
                           {"skipped", r.skipped}};
    o.metrics["samples"] = 32;
    o.metrics["tol"] = 1e-8;
    return o;
}

CriterionOutcome theta_forms() {
    const double m = 1.3, q = 0.7;
    const LieGroup gal = catalog("galilei_ext_1p1", {{"m", m}, {"hbar", 1.0}});
    const LieGroup em = catalog("galilei_em_3p1", {{"m", m}, {"q", q}, {"hbar", 1.0}});
    std::mt19937_64 rng(17);
    double eg = 0.0, ee = 0.0;
    for (int s = 0; s < 16; ++s) {
        const auto g = gal.sample(rng);
        const Eigen::VectorXd th = theta(gal, g);
        const double x = g[1], v = g[2];
        const double want[4] = {-0.5 * m * v * v, 0.0, -m * x, 1.0};
        for (int k = 0; k < 4; ++k) eg = std::max(eg, std::abs(th[k] - want[k]));

        const auto h = em.sample(rng);
        const Eigen::VectorXd te = theta(em, h);
        // t x1..3 v1..3 A1..3 At phi
        double v2 = 0.0;
        for (int i = 0; i < 3; ++i) v2 += h[4 + i] * h[4 + i];
        Eigen::VectorXd w = Eigen::VectorXd::Zero(12);
        w[0] = -(0.5 * m * v2 + q * h[10]);
        for (int i = 0; i < 3; ++i) {
            w[4 + i] = -m * h[1 + i];
            w[7 + i] = -q * h[1 + i];
        }
        w[11] = 1.0;
        ee = std::max(ee, (te - w).cwiseAbs().maxCoeff());
    }
    CriterionOutcome o;
    o.passed = std::max(eg, ee) < 1e-9;
    o.detail = fmt("galilei %.3g, em %.3g (tol 1e-9, 16 points, m = 1.3, q = 0.7)", eg, ee);
    o.metrics = {{"galilei", eg}, {"em", ee}, {"samples", 16}, {"tol", 1e-9}};
    return o;
}

CriterionOutcome kernel_flow() {
    const double m = 1.5;
    const LieGroup G = catalog("galilei_ext_1p1", {{"m", m}, {"hbar", 1.0}});
    std::mt19937_64 rng(23);
    double dir = 0.0;
    int bad_dim = 0;
    for (int s = 0; s < 16; ++s) {
        const auto g = G.sample(rng);
        if (characteristic_kernel(G, g).basis.size() != 1) ++bad_dim;
        const auto d = characteristic_direction(G, g);
        const double v = g[2];
        const double want[4] = {1.0, v, 0.0, 0.5 * m * v * v};
        for (int k = 0; k < 4; ++k) dir = std::max(dir, std::abs(d[k] - want[k]));
    }
    const OdeTrajectory tr = flow_characteristic(G, {0.0, 1.0, 0.5, 0.0}, 10.0, 1e-3);
    const ConservationReport cr = conservation_report(G, tr);
    CriterionOutcome o;
    o.passed = bad_dim == 0 && dir < 1e-9 && !tr.aborted && cr.max() < 1e-8;
    o.detail = fmt("kernel dim != 1 at %d/16 points, direction %.3g (tol 1e-9), Noether drift %.3g over t in [0,10] "
                   "step 1e-3 (tol 1e-8)",
                   bad_dim, dir, cr.max());
    o.metrics = {{"bad_dimension", bad_dim}, {"direction", dir}, {"drift", cr.max()}, {"final_x", tr.states.back()[1]}};
    return o;
}

CriterionOutcome lorentz() {
    const auto t0 = Clock::now();
    const double q = 0.7, m = 1.3, B = 2.0, E = 1.5;
    const FieldConfig cyc = parse_field_config("A1 = -0.5*2*y\nA2 = 0.5*2*x\n");
    const double period = 2.0 * std::numbers::pi * m / (q * B);
    const OdeTrajectory tr = rk4_integrate(em_equations_of_motion(cyc, q, m), {0, 0, 0, 1.0, 0, 0.2}, 3.0 * period, 1e-3);
    // Unwrapped velocity angle gives the angular frequency.
    double angle = 0.0, prev = std::atan2(tr.states[0][4], tr.states[0][3]);
    for (std::size_t k = 1; k < tr.states.size(); ++k) {
        const double a = std::atan2(tr.states[k][4], tr.states[k][3]);
        angle += wrap_angle(a - prev);
        prev = a;
    }
    const double measured = 2.0 * std::numbers::pi * tr.times.back() / std::abs(angle);
    const double period_err = std::abs(measured - period) / period;

    const FieldConfig ue = parse_field_config("A0 = -1.5*x\n");
    const OdeTrajectory tu = rk4_integrate(em_equations_of_motion(ue, q, m), {0, 0, 0, 0, 0.3, 0}, 2.0, 1e-3);
    double accel_err = 0.0;
    const double a = q * E / m;
    for (std::size_t k = 0; k < tu.states.size(); ++k) {
        const double t = tu.times[k];
        accel_err = std::max({accel_err, std::abs(tu.states[k][0] - 0.5 * a * t * t), std::abs(tu.states[k][3] - a * t),
                              std::abs(tu.states[k][1] - 0.3 * t)});
    }
    const double secs = seconds_since(t0);
    CriterionOutcome o;
    o.passed = period_err < 1e-5 && accel_err < 1e-9 && secs < 5.0;
    o.detail = fmt("cyclotron period rel. error %.3g (tol 1e-5), uniform-E error %.3g (tol 1e-9), %.2f s (limit 5 s)",
                   period_err, accel_err, secs);
    o.metrics = {{"period_expected", period}, {"period_measured", measured}, {"period_rel_error", period_err},
                 {"uniform_e_error", accel_err}};
    return o;
}

CriterionOutcome jacobi() {
    const ParamStructureTable T = parse_algebra_file(kContractedGravity);
    const Polynomial mc = Polynomial::variable("m") * Polynomial::variable("c");
    const auto ok = jacobi_residuals(T.substitute("g", mc));
    const auto bad = jacobi_residuals(T.substitute("g", Polynomial(2) * mc));
    CriterionOutcome o;
    o.passed = ok.empty() && !bad.empty();
    std::string listed;
    Json triples = Json::array();
    for (const auto& e : bad) {
        const std::string s = "[" + T.labels()[e.a] + "," + T.labels()[e.b] + "," + T.labels()[e.c] + "] -> " +
                              e.value.to_string() + " X_" + T.labels()[e.d];
        listed += (listed.empty() ? "" : "; ") + s;
        triples.push_back(s);
    }
    o.detail = fmt("g = mc: %zu nonzero residuals (exact); g = 2mc: %zu nonzero (%s)", ok.size(), bad.size(),
                   listed.c_str());
    o.metrics = {{"nonzero_g_mc", ok.size()}, {"nonzero_g_2mc", bad.size()}, {"residuals_g_2mc", triples}};
    return o;
}

CriterionOutcome gem() {
    const FieldConfig cfg = parse_field_config(kGravityField);
    const GemReport a = gem_equivalence_check(cfg, 64, 1);
    const GemReport b = gem_equivalence_check(cfg, 64, 2);
    CriterionOutcome o;
    o.passed = a.passed && b.passed && a.chosen == b.chosen;
    o.detail = fmt("chosen %s residual %.3g (tol 1e-9, 64 samples); others %.3g %.3g %.3g; printed convention %s "
                   "residual %.3g; seed 2 picks %s",
                   a.best().label().c_str(), a.best().residual, a.conventions[(a.chosen + 1) % 4].residual,
                   a.conventions[(a.chosen + 2) % 4].residual, a.conventions[(a.chosen + 3) % 4].residual,
                   a.conventions[a.printed].label().c_str(), a.conventions[a.printed].residual,
                   b.best().label().c_str());
    Json conv = Json::array();
    for (const auto& c : a.conventions) conv.push_back({{"label", c.label()}, {"residual", c.residual}});
    o.metrics = {{"chosen", a.best().label()}, {"conventions", conv}, {"seed2_chosen", b.best().label()}};
    return o;
}

CriterionOutcome so32() {
    const BracketCheck ads = bracket_table_check(so32_bracket_table(-1.0), 64, 1);
    const BracketCheck ds = bracket_table_check(so32_bracket_table(+1.0), 64, 1);
    CriterionOutcome o;
    o.passed = ads.max_residual < 1e-7 && ds.max_residual > 0.1;
    o.detail = fmt("SO(3,2) table %.3g (tol 1e-7, 64 points, H > 0.1, worst %s); flipped {k,k} %.3g (needs > 0.1)",
                   ads.max_residual, ads.worst.c_str(), ds.max_residual);
    o.metrics = {{"so32", ads.max_residual}, {"so32_worst", ads.worst}, {"flipped", ds.max_residual}};
    return o;
}

CriterionOutcome ads() {
    const auto t0 = Clock::now();
    AdsParams p;
    p.m = 0.0;
    p.xi = 0.0;
    const std::vector<std::array<int, 3>> states{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    const AdsConsistencyReport r = ads_eigen_consistency(p, states, 32, 1, 1e-6, AdsPhase::printed, AdsReading::literal);
    const double secs = seconds_since(t0);
    CriterionOutcome o;
    o.passed = r.passed && secs < 30.0;
    std::string detail;
    Json signs = Json::array();
    for (const auto& s : r.signs) {
        detail += fmt("%scross_sign %+d worst ratio %.3g", detail.empty() ? "" : ", ", s.cross_sign, s.worst_ratio());
        Json st = Json::array();
        for (const auto& x : s.states)
            st.push_back({{"state", {x.n, x.l, x.mz}},
                          {"lambda", x.lambda},
                          {"mean", {x.mean.real(), x.mean.imag()}},
                          {"variance", x.variance},
                          {"ratio", x.ratio}});
        signs.push_back({{"cross_sign", s.cross_sign}, {"states", st}});
    }
    o.detail = detail + fmt(" (tol 1e-6, 32 points per state), %.2f s (limit 30 s)", secs);
    o.metrics = {{"signs", signs}, {"passing_sign", r.passing_sign}};
    return o;
}

CriterionOutcome galilei_grid() {
    const GridSection sec = galilei_reference_section(1.0);
    const PolarizationResidual pr = galilei_polarization_residual(sec, 1.0);
    const OperatorResidual op = galilei_operator_suite(sec, 1.0);
    CriterionOutcome o;
    o.passed = pr.schrodinger < 1e-8 && op.commutator < 1e-6;
    o.detail = fmt("Schroedinger residual %.3g (tol 1e-8), [x, v] + i m residual %.3g (tol 1e-6), energy %.3g",
                   pr.schrodinger, op.commutator, op.energy);
    o.metrics = {{"schrodinger", pr.schrodinger}, {"commutator", op.commutator}, {"energy", op.energy}};
    return o;
}

CriterionOutcome kg_lattice() {
    double det = 0.0, additive = 0.0, fields = 0.0, modulus = 0.0, phase = 0.0;
    int sign = 0;
    Json per_n = Json::array();
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t N = 4; N <= 16; ++N) {
        KGLattice L;
        L.N = N;
        L.dx = 0.5;
        L.m = 0.8;
        L.c = 1.7;
        for (std::size_t j = 0; j < N; ++j)
            for (double b : {-1.3, 0.4, 2.1}) det = std::max(det, std::abs(kg_mode_map(L, j, b).determinant() - 1.0));
        KGState s;
        for (std::size_t i = 0; i < N; ++i) {
            s.phi.push_back(u(rng));
            s.phidot.push_back(u(rng));
        }
        const double b1 = 0.37, b2 = -0.81;
        const KGState two = kg_time_translate(L, kg_time_translate(L, s, b1), b2);
        const KGState one = kg_time_translate(L, s, b1 + b2);
        for (std::size_t i = 0; i < N; ++i)
            additive = std::max({additive, std::abs(two.phi[i] - one.phi[i]), std::abs(two.phidot[i] - one.phidot[i])});
        const KGFieldsReport fr = kg_group_fields(L);
        fields = std::max(fields, fr.max());
        sign = fr.central_sign;
        const KGState moved = kg_time_translate(L, s, b1);
        for (std::size_t j = 0; j < N; ++j) {
            const cplx a0 = kg_noether_charge(L, s, j), a1 = kg_noether_charge(L, moved, j);
            modulus = std::max(modulus, std::abs(std::abs(a1) - std::abs(a0)));
            // a_j(b) = a_j(0) exp(-i c Omega_j b)
            phase = std::max(phase, std::abs(wrap_angle(std::arg(a1 / a0) + L.c * L.omega(j) * b1)));
        }
        per_n.push_back({{"N", N}, {"fields", fr.max()}, {"central_sign", fr.central_sign}});
    }
    CriterionOutcome o;
    o.passed = det < 1e-12 && additive < 1e-10 && fields < 1e-9 && modulus < 1e-10 && phase < 1e-9;
    o.detail = fmt("N = 4..16: det-1 %.3g (tol 1e-12), additivity %.3g (tol 1e-10), commutator families %.3g "
                   "(tol 1e-9, central orientation %+d), |a_j| drift %.3g (tol 1e-10), phase advance %.3g (tol 1e-9)",
                   det, additive, fields, sign, modulus, phase);
    o.metrics = {{"det", det},         {"additivity", additive}, {"fields", fields}, {"charge_modulus", modulus},
                 {"charge_phase", phase}, {"per_N", per_n}};
    return o;
}

CriterionOutcome kg_semi() {
    const double on = kg_semi_invariance_residual(1.0, 64, 1);
    const double off = kg_semi_invariance_residual(1.0, 64, 1, 0.3);
    CriterionOutcome o;
    o.passed = on < 1e-10 && off > 1e-2;
    o.detail = fmt("on-shell %.3g (tol 1e-10, 64 samples), off-shell control %.3g (needs > 1e-2)", on, off);
    o.metrics = {{"on_shell", on}, {"off_shell", off}};
    return o;
}

CriterionOutcome sigma_lattice() {
    const auto t0 = Clock::now();
    SigmaLattice L;
    L.N = 8;
    const SigmaState s0 = sigma_random_state(L, 1, 2.0);
    const SigmaRun full = sigma_evolve(s0, L, 1.0, 1e-3);
    const SigmaRun half = sigma_evolve(s0, L, 1.0, 5e-4);
    const double secs = seconds_since(t0);
    const double ratio = full.drift.max() / half.drift.max();
    CriterionOutcome o;
    o.passed = full.drift.max() < 1e-8 && ratio >= 12.0 && ratio <= 20.0 && secs < 30.0;
    o.detail = fmt("drift H %.3g, total L %.3g, Casimirs %.3g (tol 1e-8); halving ratio %.3g (needs [12, 20]); %.2f s "
                   "(limit 30 s)",
                   full.drift.hamiltonian, std::max({full.drift.total_L[0], full.drift.total_L[1], full.drift.total_L[2]}),
                   *std::max_element(full.drift.casimir.begin(), full.drift.casimir.end()), ratio, secs);
    o.metrics = {{"drift", full.drift.max()},
                 {"drift_half", half.drift.max()},
                 {"ratio", ratio},
                 {"crosscheck", full.crosscheck},
                 {"amplitude", 2.0},
                 {"seed", 1}};
    return o;
}

CriterionOutcome local_euclidean() {
    SigmaLattice L;
    L.dx = 0.5;
    L.lambda = {0.2, -0.3, 1.0};
    double fields = 0.0, err_L = 0.0, err_S = 0.0, err_S_opp = 0.0;
    for (std::size_t N : {1, 2}) {
        L.N = N;
        fields = std::max(fields, sigma_local_group_fields(L).max());
        const LieGroup G = sigma_group(L);
        std::mt19937_64 rng(31);
        for (int s = 0; s < 8; ++s) {
            const SigmaNoether n = sigma_theta_noether(L, G.sample(rng));
            err_L = std::max(err_L, n.err_L);
            err_S = std::max(err_S, n.err_S_printed);
            err_S_opp = std::max(err_S_opp, n.err_S_opposite);
        }
    }
    L.N = 1;
    double printed = 0.0, control = 0.0, invariant = 0.0;
    for (int f : {0, 1}) {
        printed = std::max(printed, sigma_polarization_check(L, SigmaPhase::printed, f, 16, 1).max());
        control = std::max(control, sigma_polarization_check(L, SigmaPhase::dropped, f, 16, 1).max());
        invariant = std::max(invariant, sigma_polarization_check(L, SigmaPhase::invariant, f, 16, 1).max());
    }
    CriterionOutcome o;
    o.passed = fields < 1e-7 && err_L < 1e-9 && err_S < 1e-9 && printed < 1e-8 && control > 1e-2;
    o.detail = fmt("commutators %.3g (tol 1e-7, N = 1, 2); L = [Lambda, theta] %.3g, S = Lambda - lambda %.3g "
                   "(tol 1e-9; S = lambda - Lambda gives %.3g); printed wavefunction %.3g (tol 1e-8; opposite phase "
                   "%.3g), dropped-phase control %.3g (needs O(1))",
                   fields, err_L, err_S, err_S_opp, printed, invariant, control);
    o.metrics = {{"commutators", fields},     {"noether_L", err_L},         {"noether_S", err_S},
                 {"noether_S_opposite", err_S_opp}, {"polarization_printed", printed},
                 {"polarization_opposite", invariant}, {"polarization_control", control}};
    return o;
}

CriterionResult run_one(const Criterion& c) {
    CriterionResult r;
    r.id = c.id;
    r.key = c.key;
    r.title = c.title;
    const auto t0 = Clock::now();
    try {
        r.outcome = c.run();
    } catch (const std::exception& e) {
        r.error = e.what();
        r.outcome.passed = false;
        r.outcome.detail = std::string("error: ") + e.what();
    }
    r.seconds = seconds_since(t0);
    return r;
}

CriterionOutcome full_selftest() {
    const auto& all = acceptance_criteria();
    std::string first, second;
    double slowest = 0.0;
    bool inner_ok = true;
    for (int pass = 0; pass < 2; ++pass) {
        const auto t0 = Clock::now();
        SelftestSummary s;
        for (const auto& c : all)
            if (c.id != 15) s.results.push_back(run_one(c));
        slowest = std::max(slowest, seconds_since(t0));
        (pass == 0 ? first : second) = format_json(summary_json(s, false));
        for (const auto& r : s.results) inner_ok = inner_ok && r.error.empty();
    }
    CriterionOutcome o;
    const bool same = first == second;
    o.passed = same && inner_ok && slowest < 300.0;
    o.detail = fmt("criteria 1-14 run twice: reports %s, no exceptions %s, slowest run %.2f s (limit 300 s)",
                   same ? "byte-identical" : "DIFFER", inner_ok ? "yes" : "no", slowest);
    o.metrics = {{"identical", same}, {"report_bytes", first.size()}};
    return o;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> all{
        {1, "galilei-constants", "Extended Galilei structure constants", galilei_constants},
        {2, "identity-suite", "Left-right, L_X Theta and volume identities on catalog groups", identity_suite},
        {3, "theta-forms", "Quantization form closed forms", theta_forms},
        {4, "kernel-flow", "Galilei characteristic kernel and Noether drift", kernel_flow},
        {5, "lorentz", "Lorentz force oracles", lorentz},
        {6, "jacobi", "Gravity algebra Jacobi identity requires g = mc", jacobi},
        {7, "gem", "Gravitoelectromagnetic sign convention", gem},
        {8, "so32", "SO(3,2) bracket table and de Sitter control", so32},
        {9, "ads", "AdS eigenfunction consistency", ads},
        {10, "galilei-grid", "Galilei momentum-space wavefunction on a grid", galilei_grid},
        {11, "kg-lattice", "Klein-Gordon lattice group", kg_lattice},
        {12, "kg-semi", "Klein-Gordon semi-invariance", kg_semi},
        {13, "sigma-lattice", "Sigma lattice conservation and convergence", sigma_lattice},
        {14, "local-euclidean", "Local Euclidean group, Noether charges and polarization", local_euclidean},
        {15, "selftest-timing", "Full selftest time and determinism", full_selftest},
    };
    return all;
}

bool SelftestSummary::all_passed() const {
    for (const auto& r : results)
        if (!r.outcome.passed) return false;
    return true;
}

SelftestSummary run_selftest(const std::string& filter, std::ostream* log) {
    SelftestSummary s;
    const auto t0 = Clock::now();
    for (const auto& c : acceptance_criteria()) {
        if (!filter.empty() && c.key.find(filter) == std::string::npos && c.title.find(filter) == std::string::npos)
            continue;
        s.results.push_back(run_one(c));
        if (log) *log << result_line(s.results.back()) << std::endl;
    }
    s.seconds = seconds_since(t0);
    return s;
}

std::string result_line(const CriterionResult& r) {
    return fmt("%s [%2d] %-16s %s (%.2f s)", r.outcome.passed ? "PASS" : "FAIL", r.id, r.key.c_str(),
               r.outcome.detail.c_str(), r.seconds);
}

Json summary_json(const SelftestSummary& s, bool with_timing) {
    Json items = Json::array();
    for (const auto& r : s.results) {
        Json j = {{"id", r.id},
                  {"key", r.key},
                  {"title", r.title},
                  {"passed", r.outcome.passed},
                  {"metrics", r.outcome.metrics}};
        if (!r.error.empty()) j["error"] = r.error;
        if (with_timing) j["seconds"] = r.seconds;
        items.push_back(j);
    }
    Json out = {{"criteria", items}, {"all_passed", s.all_passed()}};
    if (with_timing) out["seconds"] = s.seconds;
    return out;
}

}  // namespace gaq
