#ifndef VSR_SOLVER_HPP
#define VSR_SOLVER_HPP

#include <utility>
#include <vector>

#include "vsr/image.hpp"
#include "vsr/weight_field.hpp"

namespace vsr {

// Gradient-flow solver parameters. The explicit scheme is stable for
// dt < eps/4 (diffusivity of the regularized curvature term is 1/|grad w|,
// bounded by 1/eps); the defaults keep dt/eps = 0.2.
struct SolverConfig {
    double lambda = 0.1;    // fidelity weight
    double dt = 2e-3;       // explicit Euler time step
    double eps = 1e-2;      // TV regularization floor inside |grad w|
    int max_iters = 500;
    double stop_tol = 1e-6; // stop when max |weight update| drops below this
};

struct SolveResult {
    WeightField weights;
    int iters_run = 0;
    double final_energy = 0.0;
};

// r(x) = sum_i w_i(x) u(x+delta_i) - u(x), replicate boundary.
std::vector<double> residual(const Image& img, const WeightField& w);

// sum_x r(x)^2 on the unit pixel grid.
double fidelity_energy(const Image& img, const WeightField& w);

// sum_i sum_x sqrt(dx+ w_i^2 + dy+ w_i^2 + eps^2), forward differences,
// zero across the far boundary. Returned without any lambda factor.
double tv_energy(const WeightField& w, double eps);

// div( grad w / |grad w|_eps ): forward differences inside the magnitude,
// backward divergence, differences crossing the boundary are zero. This is
// exactly -d(tv_energy)/dw, so the flow below is an exact gradient descent.
std::vector<double> tv_curvature(const std::vector<double>& plane, int width,
                                 int height, double eps);

// E(w) = tv_energy + (lambda/2) * fidelity_energy, the functional the
// evolution step descends.
double total_energy(const Image& img, const WeightField& w, const SolverConfig& cfg);

// One explicit Euler step of
//   w_i <- w_i + dt * ( tv_curvature(w_i) - lambda * r * u(.+delta_i) )
// with r and all curvatures taken from the input field (Jacobi update).
// Returns the new field and max |update| over all pixels and planes.
// Throws NumericError when an update is not finite.
std::pair<WeightField, double> evolve_step(const Image& img, const WeightField& w,
                                           const SolverConfig& cfg);

// Runs evolve_step from uniform weights until max |update| < stop_tol or
// max_iters is reached.
SolveResult estimate_weights(const Image& img, const SolverConfig& cfg);

}  // namespace vsr

#endif  // VSR_SOLVER_HPP
