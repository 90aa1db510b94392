#include "gaq/ode.hpp"

#include <cmath>

#include "gaq/errors.hpp"

namespace gaq {

namespace {

State axpy(const State& y, double a, const State& k) {
    if (k.size() != y.size()) throw ArgumentError("ode field returned a state of the wrong size");
    State out(y);
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += a * k[i];
    return out;
}

}  // namespace

State rk4_step(const OdeField& field, double t, const State& y, double h) {
    const State k1 = field(t, y);
    const State k2 = field(t + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = field(t + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = field(t + h, axpy(y, h, k3));
    State out(y);
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

OdeTrajectory rk4_integrate(const OdeField& field, State y0, double t_final, double step) {
    if (!(step > 0.0)) throw ArgumentError("rk4_integrate: step must be positive");
    if (!(t_final > 0.0)) throw ArgumentError("rk4_integrate: t_final must be positive");
    OdeTrajectory tr;
    tr.step = step;
    const auto full = static_cast<long>(std::floor(t_final / step * (1.0 + 1e-12)));
    tr.times.push_back(0.0);
    tr.states.push_back(std::move(y0));
    double t = 0.0;
    try {
        for (long k = 1; k <= full; ++k) {
            const double tn = static_cast<double>(k) * step;
            tr.states.push_back(rk4_step(field, t, tr.states.back(), tn - t));
            tr.times.push_back(tn);
            t = tn;
        }
        if (t_final - t > 1e-12 * t_final) {
            tr.states.push_back(rk4_step(field, t, tr.states.back(), t_final - t));
            tr.times.push_back(t_final);
        }
    } catch (const DomainError& e) {
        tr.aborted = true;
        tr.error = e.what();
    }
    return tr;
}

}  // namespace gaq
