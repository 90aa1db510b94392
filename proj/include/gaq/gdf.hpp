#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaq/expr.hpp"

namespace gaq {

// A group law g'' = g' * g written in chart coordinates.
struct GroupDefinition {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::string> coords;
    std::size_t central = 0;
    std::vector<double> identity;
    std::vector<ExprPtr> law;      // law[i] gives coords[i]''
    std::vector<ExprPtr> inverse;  // empty when not supplied
    std::optional<std::size_t> evolution;

    std::size_t dim() const { return coords.size(); }
    Scope scope() const;
    std::vector<double> default_params() const;
};

// Parses and validates GDF text. The identity check substitutes the identity
// for the left factor at 16 seeded random points.
GroupDefinition parse_group_file(const std::string& text);

// Max |law(identity, g) - g| over `samples` seeded points; params as given.
double identity_law_residual(const GroupDefinition& def, const std::vector<double>& params,
                             int samples = 16, unsigned long long seed = 7);

}  // namespace gaq
