#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gaq/gdf.hpp"
#include "gaq/jet.hpp"

namespace gaq {

// Executable composition law. Implementations evaluate over plain reals and
// over jets; an optional closed-form inverse may be supplied.
class GroupLaw {
public:
    virtual ~GroupLaw() = default;
    virtual std::size_t dim() const = 0;
    virtual std::vector<double> compose(std::span<const double> gp, std::span<const double> g) const = 0;
    virtual std::vector<Jet2> compose(std::span<const Jet2> gp, std::span<const Jet2> g) const = 0;
    virtual bool has_inverse() const { return false; }
    virtual std::vector<double> inverse(std::span<const double> g) const;
    virtual std::vector<Jet2> inverse(std::span<const Jet2> g) const;
};

// Adapts a native law class providing `template <class T> std::vector<T>
// compose(std::span<const T>, std::span<const T>) const` (and optionally inverse).
template <class Impl, bool HasInverse = false>
class NativeLaw final : public GroupLaw {
public:
    explicit NativeLaw(Impl impl) : impl_(std::move(impl)) {}
    std::size_t dim() const override { return impl_.dim(); }
    std::vector<double> compose(std::span<const double> gp, std::span<const double> g) const override {
        return impl_.template compose<double>(gp, g);
    }
    std::vector<Jet2> compose(std::span<const Jet2> gp, std::span<const Jet2> g) const override {
        return impl_.template compose<Jet2>(gp, g);
    }
    bool has_inverse() const override { return HasInverse; }
    std::vector<double> inverse(std::span<const double> g) const override {
        if constexpr (HasInverse) return impl_.template inverse<double>(g);
        else return GroupLaw::inverse(g);
    }
    std::vector<Jet2> inverse(std::span<const Jet2> g) const override {
        if constexpr (HasInverse) return impl_.template inverse<Jet2>(g);
        else return GroupLaw::inverse(g);
    }
    const Impl& impl() const { return impl_; }

private:
    Impl impl_;
};

struct GroupInfo {
    std::string name;
    std::vector<std::string> labels;
    std::size_t central = 0;
    std::vector<double> identity;
    std::size_t evolution = 0;
    std::vector<double> sample_radius;  // per coordinate; samples are uniform in [-r, r]
    std::string description;
};

class LieGroup {
public:
    LieGroup(GroupInfo info, std::shared_ptr<const GroupLaw> law);

    // Binds parameters (overriding file defaults; unknown names are rejected).
    static LieGroup from_definition(const GroupDefinition& def,
                                    const std::map<std::string, double>& params = {});

    std::size_t dim() const { return info_.labels.size(); }
    const std::string& name() const { return info_.name; }
    const std::vector<std::string>& labels() const { return info_.labels; }
    std::size_t central() const { return info_.central; }
    std::size_t evolution() const { return info_.evolution; }
    const std::vector<double>& identity() const { return info_.identity; }
    const GroupInfo& info() const { return info_; }
    const GroupLaw& law() const { return *law_; }
    LieGroup with_description(std::string text) const {
        GroupInfo info = info_;
        info.description = std::move(text);
        return LieGroup(std::move(info), law_);
    }
    std::size_t index_of(const std::string& label) const;

    std::vector<double> compose(std::span<const double> gp, std::span<const double> g) const {
        return law_->compose(gp, g);
    }
    std::vector<Jet2> compose(std::span<const Jet2> gp, std::span<const Jet2> g) const {
        return law_->compose(gp, g);
    }

    // Closed form when available, otherwise Newton on compose(h, g) = e from the
    // identity (tol 1e-12, 50 iterations). Jet inputs: values first, then two
    // corrections against the converged Jacobian carry first and second order.
    std::vector<double> inverse(std::span<const double> g) const;
    std::vector<Jet2> inverse(std::span<const Jet2> g) const;

    std::vector<double> sample(std::mt19937_64& rng) const;

    // Identity (both sides, 1e-10), inverse (both sides, 1e-9) and associativity
    // (1e-9) over `samples` seeded points. Throws ValidationError.
    void validate(int samples = 64, std::uint64_t seed = 11) const;

private:
    std::vector<double> newton_inverse(std::span<const double> g) const;
    Eigen::MatrixXd left_jacobian(std::span<const double> h, std::span<const double> g) const;

    GroupInfo info_;
    std::shared_ptr<const GroupLaw> law_;
};

inline std::vector<double> compose(const LieGroup& G, std::span<const double> gp, std::span<const double> g) {
    return G.compose(gp, g);
}
inline std::vector<Jet2> compose(const LieGroup& G, std::span<const Jet2> gp, std::span<const Jet2> g) {
    return G.compose(gp, g);
}

double associativity_check(const LieGroup& G, int samples, std::uint64_t seed);

struct CatalogEntry {
    std::string key;
    std::vector<std::string> required_params;
    std::string description;
    std::string gdf;  // source text
};

const std::vector<CatalogEntry>& catalog_entries();
LieGroup catalog(const std::string& key, const std::map<std::string, double>& params);

}  // namespace gaq
