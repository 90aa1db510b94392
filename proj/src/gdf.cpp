#include "gaq/gdf.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>

#include "gaq/errors.hpp"

namespace gaq {

namespace {

struct Line {
    std::size_t number;
    std::string text;  // comment stripped
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

double parse_number(const std::string& s, std::size_t line, std::size_t col) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw ParseError("expected a number, got '" + s + "'", line, col);
    return v;
}

std::size_t column_of(const std::string& raw, const std::string& token) {
    const auto p = raw.find(token);
    return p == std::string::npos ? 1 : p + 1;
}

// Splits "LHS = RHS"; returns the RHS start column (0-based).
std::pair<std::string, std::size_t> split_assignment(const Line& ln, std::string& lhs) {
    const auto eq = ln.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected '='", ln.number, ln.text.size() + 1);
    lhs = trim(ln.text.substr(0, eq));
    return {ln.text.substr(eq + 1), eq + 1};
}

}  // namespace

Scope GroupDefinition::scope() const {
    Scope s;
    s.coords = coords;
    for (const auto& [name, v] : params) s.params.push_back(name);
    return s;
}

std::vector<double> GroupDefinition::default_params() const {
    std::vector<double> v;
    for (const auto& p : params) v.push_back(p.second);
    return v;
}

double identity_law_residual(const GroupDefinition& def, const std::vector<double>& params,
                             int samples, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    std::vector<double> g(def.dim());
    for (int s = 0; s < samples; ++s) {
        for (double& x : g) x = u(rng);
        for (std::size_t i = 0; i < def.dim(); ++i) {
            const double v = eval_expr<double>(*def.law[i], def.identity, g, params);
            worst = std::max(worst, std::abs(v - g[i]));
        }
    }
    return worst;
}

GroupDefinition parse_group_file(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream is(text);
        std::size_t n = 0;
        for (std::string raw; std::getline(is, raw);) {
            ++n;
            if (const auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
            if (!trim(raw).empty()) lines.push_back({n, raw});
        }
    }
    if (lines.empty()) throw ParseError("empty group file", 1, 1);

    GroupDefinition def;
    bool have_coords = false, have_central = false, have_identity = false, have_law = false;
    std::string central_name, evolution_name;
    std::size_t central_line = 0, evolution_line = 0;
    std::vector<double> identity;
    std::size_t identity_line = 0;

    {
        const auto w = words(lines[0].text);
        if (w.size() != 2 || w[0] != "group" || !is_ident(w[1]))
            throw ParseError("first line must be 'group NAME'", lines[0].number, 1);
        def.name = w[1];
    }

    enum class Section { header, law, inverse } section = Section::header;
    std::vector<std::pair<std::string, Line>> law_lines, inverse_lines;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& ln = lines[k];
        const std::string t = trim(ln.text);
        if (t == "law:") {
            if (have_law) throw ParseError("duplicate 'law:' section", ln.number, 1);
            have_law = true;
            section = Section::law;
            continue;
        }
        if (t == "inverse:") {
            if (!def.inverse.empty() || !inverse_lines.empty())
                throw ParseError("duplicate 'inverse:' section", ln.number, 1);
            section = Section::inverse;
            continue;
        }
        const auto w = words(t);
        const std::string& key = w[0];
        if (key == "params" || key == "coords" || key == "central" || key == "identity" ||
            key == "evolution") {
            if (section != Section::header)
                throw ParseError("'" + key + "' must precede the law section", ln.number, 1);
            if (key == "params") {
                for (std::size_t i = 1; i < w.size(); ++i) {
                    const auto eq = w[i].find('=');
                    const std::size_t col = column_of(ln.text, w[i]);
                    if (eq == std::string::npos) throw ParseError("expected NAME=NUMBER", ln.number, col);
                    const std::string name = w[i].substr(0, eq);
                    if (!is_ident(name) || is_function_name(name))
                        throw ParseError("bad parameter name '" + name + "'", ln.number, col);
                    for (const auto& p : def.params)
                        if (p.first == name) throw ParseError("duplicate parameter '" + name + "'", ln.number, col);
                    def.params.emplace_back(name, parse_number(w[i].substr(eq + 1), ln.number, col + eq + 1));
                }
            } else if (key == "coords") {
                if (have_coords) throw ParseError("duplicate 'coords' line", ln.number, 1);
                have_coords = true;
                if (w.size() < 2) throw ParseError("'coords' needs at least one name", ln.number, 1);
                for (std::size_t i = 1; i < w.size(); ++i) {
                    const std::size_t col = column_of(ln.text, w[i]);
                    if (!is_ident(w[i]) || is_function_name(w[i]))
                        throw ParseError("bad coordinate name '" + w[i] + "'", ln.number, col);
                    if (std::find(def.coords.begin(), def.coords.end(), w[i]) != def.coords.end())
                        throw ParseError("duplicate coordinate '" + w[i] + "'", ln.number, col);
                    def.coords.push_back(w[i]);
                }
            } else if (key == "central") {
                if (w.size() != 2) throw ParseError("expected 'central NAME'", ln.number, 1);
                have_central = true;
                central_name = w[1];
                central_line = ln.number;
            } else if (key == "evolution") {
                if (w.size() != 2) throw ParseError("expected 'evolution NAME'", ln.number, 1);
                evolution_name = w[1];
                evolution_line = ln.number;
            } else {
                have_identity = true;
                identity_line = ln.number;
                for (std::size_t i = 1; i < w.size(); ++i)
                    identity.push_back(parse_number(w[i], ln.number, column_of(ln.text, w[i])));
            }
            continue;
        }
        if (section == Section::header)
            throw ParseError("unexpected line '" + t + "'", ln.number, 1);
        std::string lhs;
        split_assignment(ln, lhs);
        if (section == Section::law) {
            if (lhs.size() < 3 || lhs.substr(lhs.size() - 2) != "''")
                throw ParseError("law lines must read NAME'' = EXPR", ln.number, 1);
            law_lines.emplace_back(trim(lhs.substr(0, lhs.size() - 2)), ln);
        } else {
            if (lhs.size() < 4 || lhs.substr(lhs.size() - 3) != "^-1")
                throw ParseError("inverse lines must read NAME^-1 = EXPR", ln.number, 1);
            inverse_lines.emplace_back(trim(lhs.substr(0, lhs.size() - 3)), ln);
        }
    }

    if (!have_coords) throw ParseError("missing section 'coords'", lines.back().number, 1);
    if (!have_central) throw ParseError("missing section 'central'", lines.back().number, 1);
    if (!have_identity) throw ParseError("missing section 'identity'", lines.back().number, 1);
    if (!have_law) throw ParseError("missing section 'law:'", lines.back().number, 1);
    if (law_lines.empty()) throw ParseError("empty law section", lines.back().number, 1);

    const auto index_of = [&](const std::string& name) -> std::optional<std::size_t> {
        auto it = std::find(def.coords.begin(), def.coords.end(), name);
        if (it == def.coords.end()) return std::nullopt;
        return static_cast<std::size_t>(it - def.coords.begin());
    };
    for (const auto& p : def.params)
        if (index_of(p.first))
            throw ValidationError("name '" + p.first + "' is both a parameter and a coordinate");

    if (auto c = index_of(central_name)) def.central = *c;
    else throw ParseError("central coordinate '" + central_name + "' is not declared", central_line, 1);
    if (!evolution_name.empty()) {
        if (auto c = index_of(evolution_name)) def.evolution = *c;
        else throw ParseError("evolution coordinate '" + evolution_name + "' is not declared", evolution_line, 1);
    } else if (auto c = index_of("t")) {
        def.evolution = *c;
    }
    if (identity.size() != def.dim())
        throw ParseError("identity has " + std::to_string(identity.size()) + " entries, expected " +
                             std::to_string(def.dim()),
                         identity_line, 1);
    def.identity = identity;

    const Scope law_scope = def.scope();
    def.law.assign(def.dim(), nullptr);
    for (const auto& [name, ln] : law_lines) {
        auto idx = index_of(name);
        if (!idx) throw ParseError("law for undeclared coordinate '" + name + "'", ln.number, 1);
        if (def.law[*idx]) throw ParseError("duplicate law for coordinate '" + name + "'", ln.number, 1);
        std::string lhs;
        auto [rhs, col] = split_assignment(ln, lhs);
        def.law[*idx] = parse_expression(rhs, law_scope, ln.number, col);
    }
    for (std::size_t i = 0; i < def.dim(); ++i)
        if (!def.law[i])
            throw ParseError("law has no entry for coordinate '" + def.coords[i] + "'", lines.back().number, 1);

    if (!inverse_lines.empty()) {
        Scope inv_scope = law_scope;
        inv_scope.allow_primed = false;
        def.inverse.assign(def.dim(), nullptr);
        for (const auto& [name, ln] : inverse_lines) {
            auto idx = index_of(name);
            if (!idx) throw ParseError("inverse for undeclared coordinate '" + name + "'", ln.number, 1);
            if (def.inverse[*idx]) throw ParseError("duplicate inverse for '" + name + "'", ln.number, 1);
            std::string lhs;
            auto [rhs, col] = split_assignment(ln, lhs);
            def.inverse[*idx] = parse_expression(rhs, inv_scope, ln.number, col);
        }
        for (std::size_t i = 0; i < def.dim(); ++i)
            if (!def.inverse[i])
                throw ParseError("inverse has no entry for coordinate '" + def.coords[i] + "'",
                                 lines.back().number, 1);
    }

    const double r = identity_law_residual(def, def.default_params());
    if (!(r < 1e-10))
        throw ValidationError("not a group law at identity: residual " + std::to_string(r));
    return def;
}

}  // namespace gaq
