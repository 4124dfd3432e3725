#include "vsr/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vsr/errors.hpp"

namespace vsr {

namespace {

void check_dims(const Image& img, const WeightField& w) {
    if (img.width() != w.width() || img.height() != w.height())
        throw std::invalid_argument("image and weight field dimensions do not match");
}

// sum_i w_i u(x+delta_i) - u, evaluated as (S-1)*u + sum_i w_i*(u_i - u).
// The difference form makes constant regions with unit-sum weights vanish
// exactly, and the paired accumulation (see weight_sum) keeps the value
// invariant under transposition.
double residual_at(const Image& img, const WeightField& w, int x, int y) {
    const std::size_t idx = static_cast<std::size_t>(y) * img.width() + x;
    const double u0 = img.at(x, y);
    double t[8];
    for (int i = 0; i < 8; ++i)
        t[i] = w.plane(i)[idx] * (neighbor_value(img, x, y, i) - u0);
    const double p1 = t[0] + t[7];
    const double p2 = t[2] + t[5];
    const double p3 = t[1] + t[6];
    const double p4 = t[3] + t[4];
    const double diff = (p1 + p2) + (p3 + p4);
    return (weight_sum(w, idx) - 1.0) * u0 + diff;
}

}  // namespace

std::vector<double> residual(const Image& img, const WeightField& w) {
    check_dims(img, w);
    std::vector<double> r(img.size());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            r[static_cast<std::size_t>(y) * img.width() + x] = residual_at(img, w, x, y);
    return r;
}

double fidelity_energy(const Image& img, const WeightField& w) {
    check_dims(img, w);
    double e = 0.0;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            const double r = residual_at(img, w, x, y);
            e += r * r;
        }
    return e;
}

double tv_energy(const WeightField& w, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const int width = w.width(), height = w.height();
    double e = 0.0;
    for (int i = 0; i < 8; ++i) {
        const std::vector<double>& p = w.plane(i);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                const std::size_t idx = static_cast<std::size_t>(y) * width + x;
                const double gx = x + 1 < width ? p[idx + 1] - p[idx] : 0.0;
                const double gy = y + 1 < height ? p[idx + width] - p[idx] : 0.0;
                e += std::sqrt(gx * gx + gy * gy + eps * eps);
            }
    }
    return e;
}

std::vector<double> tv_curvature(const std::vector<double>& plane, int width,
                                 int height, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (plane.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("plane size does not match dimensions");

    // Flux (grad w) / |grad w|_eps from forward differences, zero at the far
    // boundary by construction.
    std::vector<double> fx(plane.size()), fy(plane.size());
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * width + x;
            const double gx = x + 1 < width ? plane[idx + 1] - plane[idx] : 0.0;
            const double gy = y + 1 < height ? plane[idx + width] - plane[idx] : 0.0;
            const double g = std::sqrt(gx * gx + gy * gy + eps * eps);
            fx[idx] = gx / g;
            fy[idx] = gy / g;
        }

    // Backward divergence; this pairing makes the step the exact negative
    // gradient of tv_energy.
    std::vector<double> div(plane.size());
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * width + x;
            const double dx = fx[idx] - (x > 0 ? fx[idx - 1] : 0.0);
            const double dy = fy[idx] - (y > 0 ? fy[idx - width] : 0.0);
            div[idx] = dx + dy;
        }
    return div;
}

double total_energy(const Image& img, const WeightField& w, const SolverConfig& cfg) {
    return tv_energy(w, cfg.eps) + 0.5 * cfg.lambda * fidelity_energy(img, w);
}

std::pair<WeightField, double> evolve_step(const Image& img, const WeightField& w,
                                           const SolverConfig& cfg) {
    check_dims(img, w);
    const int width = img.width(), height = img.height();
    const std::vector<double> r = residual(img, w);

    WeightField out(width, height);
    double max_update = 0.0;
    for (int i = 0; i < 8; ++i) {
        const std::vector<double> curv = tv_curvature(w.plane(i), width, height, cfg.eps);
        const std::vector<double>& src = w.plane(i);
        std::vector<double>& dst = out.plane(i);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                const std::size_t idx = static_cast<std::size_t>(y) * width + x;
                const double force = curv[idx] - cfg.lambda * r[idx] * neighbor_value(img, x, y, i);
                const double update = cfg.dt * force;
                const double next = src[idx] + update;
                if (!std::isfinite(next))
                    throw NumericError("non-finite weight update (time step too large?)");
                dst[idx] = next;
                const double mag = std::fabs(update);
                if (mag > max_update) max_update = mag;
            }
    }
    return {std::move(out), max_update};
}

SolveResult estimate_weights(const Image& img, const SolverConfig& cfg) {
    if (cfg.lambda < 0.0 || !(cfg.dt > 0.0) || !(cfg.eps > 0.0) ||
        cfg.max_iters < 1 || cfg.stop_tol < 0.0)
        throw std::invalid_argument("invalid solver configuration");

    WeightField w = WeightField::uniform(img.width(), img.height());
    int iters = 0;
    while (iters < cfg.max_iters) {
        double max_update = 0.0;
        try {
            auto stepped = evolve_step(img, w, cfg);
            w = std::move(stepped.first);
            max_update = stepped.second;
        } catch (const NumericError& e) {
            throw NumericError(std::string(e.what()) + " at iteration " +
                               std::to_string(iters + 1));
        }
        ++iters;
        if (max_update < cfg.stop_tol) break;
    }

    const double energy = total_energy(img, w, cfg);
    if (!std::isfinite(energy))
        throw NumericError("non-finite energy after " + std::to_string(iters) + " iterations");
    return {std::move(w), iters, energy};
}

}  // namespace vsr
