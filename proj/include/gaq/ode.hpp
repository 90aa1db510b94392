#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gaq {

using State = std::vector<double>;
using OdeField = std::function<State(double t, const State& y)>;

struct OdeTrajectory {
    std::vector<double> times;
    std::vector<State> states;
    double step = 0.0;
    bool aborted = false;  // set when the field raised a domain error
    std::string error;
};

// Classic fixed-step RK4 from t = 0; the final step is shortened to land on t_final.
OdeTrajectory rk4_integrate(const OdeField& field, State y0, double t_final, double step);

// One RK4 step.
State rk4_step(const OdeField& field, double t, const State& y, double h);

}  // namespace gaq
