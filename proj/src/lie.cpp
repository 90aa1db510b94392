#include "gaq/lie.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gaq/errors.hpp"
#include "gaq/expr.hpp"

namespace gaq {

namespace {

using Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t find_label(const std::vector<std::string>& labels, const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw ArgumentError("unknown generator label '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

FieldJet invariant_fields(const LieGroup& G, FieldKind kind, std::span<const double> g) {
    const std::size_t n = G.dim();
    if (g.size() != n) throw ArgumentError("invariant_fields: wrong point length");
    const std::size_t m = 2 * n;
    std::vector<Jet2> h, p;
    h.reserve(n);
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) h.push_back(Jet2::variable(G.identity()[i], i, m));
    for (std::size_t i = 0; i < n; ++i) p.push_back(Jet2::variable(g[i], n + i, m));
    const auto r = kind == FieldKind::right ? G.compose(std::span<const Jet2>(h), std::span<const Jet2>(p))
                                            : G.compose(std::span<const Jet2>(p), std::span<const Jet2>(h));
    FieldJet out;
    out.X.resize(ix(n), ix(n));
    out.dX.assign(n, Eigen::MatrixXd(ix(n), ix(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < n; ++b) {
            out.X(ix(i), ix(b)) = r[i].grad(b);
            for (std::size_t j = 0; j < n; ++j) out.dX[b](ix(i), ix(j)) = r[i].hess(b, n + j);
        }
    return out;
}

namespace {

VectorField make_field(const LieGroup& G, FieldKind kind, std::size_t b) {
    if (b >= G.dim()) throw ArgumentError("generator index out of range");
    VectorField f;
    f.kind = kind;
    f.label = G.labels()[b];
    f.jet = [G, kind, b](std::span<const double> g) {
        const FieldJet fj = invariant_fields(G, kind, g);
        return std::make_pair(Eigen::VectorXd(fj.X.col(ix(b))), fj.dX[b]);
    };
    f.value = [jet = f.jet](std::span<const double> g) { return jet(g).first; };
    return f;
}

}  // namespace

VectorField left_field(const LieGroup& G, std::size_t b) { return make_field(G, FieldKind::left, b); }
VectorField right_field(const LieGroup& G, std::size_t b) { return make_field(G, FieldKind::right, b); }

Eigen::VectorXd bracket(const Eigen::VectorXd& X, const Eigen::MatrixXd& dX, const Eigen::VectorXd& Y,
                        const Eigen::MatrixXd& dY) {
    return dY * X - dX * Y;
}

VectorField commutator_field(const VectorField& X, const VectorField& Y) {
    if (!X.jet || !Y.jet) throw ArgumentError("commutator_field: operands must carry first derivatives");
    VectorField f;
    f.kind = X.kind;
    f.label = "[" + X.label + "," + Y.label + "]";
    f.value = [xj = X.jet, yj = Y.jet](std::span<const double> g) {
        const auto [x, dx] = xj(g);
        const auto [y, dy] = yj(g);
        return bracket(x, dx, y, dy);
    };
    return f;
}

StructureTable::StructureTable(std::vector<std::string> labels)
    : labels_(std::move(labels)), C_(labels_.size() * labels_.size() * labels_.size(), 0.0) {}

std::size_t StructureTable::index_of(const std::string& label) const { return find_label(labels_, label); }

double StructureTable::at(const std::string& c, const std::string& a, const std::string& b) const {
    return (*this)(index_of(c), index_of(a), index_of(b));
}

void StructureTable::set(std::size_t c, std::size_t a, std::size_t b, double v) {
    const std::size_t n = dim();
    if (a == b) {
        if (v != 0.0) throw ArgumentError("structure constant C^c_{aa} must vanish");
        return;
    }
    C_[(c * n + a) * n + b] = v;
    C_[(c * n + b) * n + a] = -v;
}

namespace {

// Expansion of the pairwise brackets of a field family in that same family.
std::vector<double> bracket_coefficients(const FieldJet& fj) {
    const auto n = static_cast<std::size_t>(fj.X.cols());
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(fj.X);
    std::vector<double> out(n * n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const Eigen::VectorXd br = bracket(fj.X.col(ix(a)), fj.dX[a], fj.X.col(ix(b)), fj.dX[b]);
            const Eigen::VectorXd c = lu.solve(br);
            for (std::size_t k = 0; k < n; ++k) out[(k * n + a) * n + b] = c[ix(k)];
        }
    return out;
}

}  // namespace

StructureTable structure_constants(const LieGroup& G, int closure_samples, std::uint64_t seed,
                                   double closure_tol) {
    const std::size_t n = G.dim();
    StructureTable T(G.labels());
    const auto right = bracket_coefficients(invariant_fields(G, FieldKind::right, G.identity()));
    const auto left = bracket_coefficients(invariant_fields(G, FieldKind::left, G.identity()));
    double lr = 0.0;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const double v = right[(c * n + a) * n + b];
                T.set(c, a, b, v);
                lr = std::max(lr, std::abs(v + left[(c * n + a) * n + b]));
            }
    T.left_right_residual = lr;

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < closure_samples; ++s) {
        const auto g = G.sample(rng);
        const FieldJet fj = invariant_fields(G, FieldKind::right, g);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                Eigen::VectorXd r = bracket(fj.X.col(ix(a)), fj.dX[a], fj.X.col(ix(b)), fj.dX[b]);
                for (std::size_t c = 0; c < n; ++c) {
                    const double k = T(c, a, b);
                    if (k != 0.0) r -= k * fj.X.col(ix(c));
                }
                worst = std::max(worst, r.lpNorm<Eigen::Infinity>());
            }
    }
    T.closure_residual = worst;
    if (!(worst <= closure_tol))
        throw ValidationError("group " + G.name() + " not closed at identity: basis-expansion residual " +
                              std::to_string(worst));
    return T;
}

JacobiReport jacobi_residuals(const StructureTable& T) {
    const std::size_t n = T.dim();
    JacobiReport rep;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    double j = 0.0;
                    for (std::size_t e = 0; e < n; ++e)
                        j += T(e, a, b) * T(d, e, c) + T(e, b, c) * T(d, e, a) + T(e, c, a) * T(d, e, b);
                    rep.max_residual = std::max(rep.max_residual, std::abs(j));
                    if (std::abs(j) > 1e-12) rep.nonzero.push_back({a, b, c, d, j});
                }
    return rep;
}

ParamStructureTable::ParamStructureTable(std::vector<std::string> labels, std::vector<std::string> params)
    : labels_(std::move(labels)), params_(std::move(params)),
      C_(labels_.size() * labels_.size() * labels_.size()) {}

std::size_t ParamStructureTable::index_of(const std::string& label) const { return find_label(labels_, label); }

void ParamStructureTable::set(std::size_t c, std::size_t a, std::size_t b, const Polynomial& v) {
    const std::size_t n = dim();
    if (a == b) {
        if (!v.is_zero()) throw ArgumentError("structure constant C^c_{aa} must vanish");
        return;
    }
    C_[(c * n + a) * n + b] = v;
    C_[(c * n + b) * n + a] = -v;
}

ParamStructureTable ParamStructureTable::substitute(const std::string& param, const Polynomial& value) const {
    ParamStructureTable out = *this;
    for (auto& p : out.C_) p = p.substitute(param, value);
    return out;
}

StructureTable ParamStructureTable::evaluate(const std::map<std::string, double>& values) const {
    StructureTable T(labels_);
    const std::size_t n = dim();
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) T.set(c, a, b, (*this)(c, a, b).evaluate(values));
    return T;
}

std::vector<ParamJacobiEntry> jacobi_residuals(const ParamStructureTable& T) {
    const std::size_t n = T.dim();
    std::vector<ParamJacobiEntry> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    Polynomial j;
                    for (std::size_t e = 0; e < n; ++e) {
                        if (!T(e, a, b).is_zero() && !T(d, e, c).is_zero()) j += T(e, a, b) * T(d, e, c);
                        if (!T(e, b, c).is_zero() && !T(d, e, a).is_zero()) j += T(e, b, c) * T(d, e, a);
                        if (!T(e, c, a).is_zero() && !T(d, e, b).is_zero()) j += T(e, c, a) * T(d, e, b);
                    }
                    if (!j.is_zero()) out.push_back({a, b, c, d, j});
                }
    return out;
}

ParamStructureTable parse_algebra_file(const std::string& text) {
    std::istringstream is(text);
    std::string name, central;
    std::vector<std::string> params, basis;
    bool have_basis = false;
    struct Entry {
        std::size_t line;
        std::string a, b, c, rhs;
        std::size_t col;
    };
    std::vector<Entry> entries;
    std::size_t n = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++n;
        if (const auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        const std::string t = trim(raw);
        if (t.empty()) continue;
        std::istringstream ws(t);
        std::string key;
        ws >> key;
        if (key == "algebra") {
            ws >> name;
        } else if (key == "params") {
            for (std::string w; ws >> w;) params.push_back(w);
        } else if (key == "basis") {
            have_basis = true;
            for (std::string w; ws >> w;) {
                if (std::find(basis.begin(), basis.end(), w) != basis.end())
                    throw ParseError("duplicate basis label '" + w + "'", n, 1);
                basis.push_back(w);
            }
        } else if (key == "central") {
            ws >> central;
        } else if (t.rfind("C[", 0) == 0) {
            const auto close = t.find(']');
            const auto eq = t.find('=');
            if (close == std::string::npos || eq == std::string::npos || eq < close)
                throw ParseError("expected C[a,b,c] = POLY", n, 1);
            std::vector<std::string> idx;
            std::istringstream ls(t.substr(2, close - 2));
            for (std::string w; std::getline(ls, w, ',');) idx.push_back(trim(w));
            if (idx.size() != 3) throw ParseError("expected three labels in C[a,b,c]", n, 3);
            const std::size_t col = raw.find('=') + 1;
            entries.push_back({n, idx[0], idx[1], idx[2], raw.substr(col), col});
        } else {
            throw ParseError("unexpected line '" + t + "'", n, 1);
        }
    }
    if (!have_basis) throw ParseError("missing 'basis' line", n, 1);
    ParamStructureTable T(basis, params);
    T.name = name;
    if (!central.empty()) {
        find_label(basis, central);
        T.central = central;
    }
    Scope scope;
    scope.params = params;
    scope.allow_primed = false;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& e : entries) {
        const auto at = [&](const std::string& l) {
            auto it = std::find(basis.begin(), basis.end(), l);
            if (it == basis.end()) throw ParseError("unknown basis label '" + l + "'", e.line, 1);
            return static_cast<std::size_t>(it - basis.begin());
        };
        const std::size_t a = at(e.a), b = at(e.b), c = at(e.c);
        if (a == b) throw ParseError("C[a,a,c] must vanish", e.line, 1);
        const auto key = std::make_tuple(std::min(a, b), std::max(a, b), c);
        if (!seen.insert(key).second) throw ParseError("duplicate entry for C[" + e.a + "," + e.b + "," + e.c + "]", e.line, 1);
        const Polynomial p = to_polynomial(*parse_expression(e.rhs, scope, e.line, e.col));
        T.set(c, a, b, p);
    }
    return T;
}

ThetaJet theta_jet(const LieGroup& G, std::span<const double> g) {
    const std::size_t n = G.dim();
    if (g.size() != n) throw ArgumentError("theta: wrong point length");
    const std::size_t m = 2 * n;
    std::vector<Jet2> u, w;
    u.reserve(n);
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) u.push_back(Jet2::variable(g[i], i, m));
    for (std::size_t i = 0; i < n; ++i) w.push_back(Jet2::variable(g[i], n + i, m));
    const auto ui = G.inverse(std::span<const Jet2>(u));
    const auto r = G.compose(std::span<const Jet2>(ui), std::span<const Jet2>(w));
    const Jet2& F = r[G.central()];
    ThetaJet out;
    out.theta.resize(ix(n));
    out.dtheta_partial.resize(ix(n), ix(n));
    for (std::size_t j = 0; j < n; ++j) {
        out.theta[ix(j)] = F.grad(n + j);
        for (std::size_t i = 0; i < n; ++i) out.dtheta_partial(ix(i), ix(j)) = F.hess(i, n + j) + F.hess(n + i, n + j);
    }
    out.dtheta = out.dtheta_partial - out.dtheta_partial.transpose();
    return out;
}

Eigen::VectorXd theta(const LieGroup& G, std::span<const double> g) { return theta_jet(G, g).theta; }
Eigen::MatrixXd dtheta(const LieGroup& G, std::span<const double> g) { return theta_jet(G, g).dtheta; }

NullspaceResult characteristic_kernel(const LieGroup& G, std::span<const double> g, double tol) {
    const ThetaJet tj = theta_jet(G, g);
    const Index n = tj.theta.size();
    Eigen::MatrixXd A(n + 1, n);
    A.topRows(n) = tj.dtheta;
    A.row(n) = tj.theta.transpose();
    return nullspace(A, tol);
}

Eigen::VectorXd noether_invariants(const LieGroup& G, std::span<const double> g) {
    const Eigen::VectorXd th = theta(G, g);
    const FieldJet fj = invariant_fields(G, FieldKind::right, g);
    return fj.X.transpose() * th;
}

double noether_invariant(const LieGroup& G, std::size_t a, std::span<const double> g) {
    if (a >= G.dim()) throw ArgumentError("noether_invariant: generator index out of range");
    return noether_invariants(G, g)[ix(a)];
}

ClassificationReport classify_parameters(const StructureTable& T, const std::string& central) {
    const std::size_t z = T.index_of(central);
    ClassificationReport rep;
    rep.central = central;
    const std::size_t n = T.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (a != z && b != z && std::abs(T(z, a, b)) > 1e-12) {
                rep.pairings.emplace_back(T.labels()[a], T.labels()[b]);
                rep.basic.insert(T.labels()[a]);
                rep.basic.insert(T.labels()[b]);
            }
    for (std::size_t a = 0; a < n; ++a)
        if (a != z && !rep.basic.count(T.labels()[a])) rep.non_basic.insert(T.labels()[a]);
    return rep;
}

InvarianceReport invariance_suite(const LieGroup& G, int samples, std::uint64_t seed) {
    const std::size_t n = G.dim();
    InvarianceReport rep;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const auto g = G.sample(rng);
        ThetaJet tj;
        try {
            tj = theta_jet(G, g);
        } catch (const NumericError&) {
            ++rep.skipped;
            continue;
        }
        ++rep.samples;
        const FieldJet R = invariant_fields(G, FieldKind::right, g);
        const FieldJet L = invariant_fields(G, FieldKind::left, g);

        // Cartan: L_X Theta = d(i_X Theta) + i_X dTheta.
        for (std::size_t a = 0; a < n; ++a) {
            const Eigen::VectorXd X = R.X.col(ix(a));
            const Eigen::VectorXd d_contract = R.dX[a].transpose() * tj.theta + tj.dtheta_partial * X;
            const Eigen::VectorXd contract_d = tj.dtheta.transpose() * X;
            rep.lie_derivative_theta = std::max(rep.lie_derivative_theta, (d_contract + contract_d).lpNorm<Eigen::Infinity>());
        }

        // Density rho = 1/|det M|, M the left-field matrix (inverse of the left coframe).
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(L.X);
        Eigen::VectorXd dlog_rho(ix(n));
        for (std::size_t k = 0; k < n; ++k) {
            Eigen::MatrixXd dM(ix(n), ix(n));
            for (std::size_t b = 0; b < n; ++b) dM.col(ix(b)) = L.dX[b].col(ix(k));
            dlog_rho[ix(k)] = -lu.solve(dM).trace();
        }
        for (std::size_t a = 0; a < n; ++a) {
            const double div = R.dX[a].trace() + R.X.col(ix(a)).dot(dlog_rho);
            rep.volume_divergence = std::max(rep.volume_divergence, std::abs(div));
        }

        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Eigen::VectorXd c = bracket(L.X.col(ix(a)), L.dX[a], R.X.col(ix(b)), R.dX[b]);
                rep.left_right_commutator = std::max(rep.left_right_commutator, c.lpNorm<Eigen::Infinity>());
            }
    }
    return rep;
}

}  // namespace gaq
