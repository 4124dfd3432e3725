// Independent brute-force reference implementations used to cross-check the
// library. Everything here is written as direct per-pixel loops straight from
// the definitions and shares no code with the implementation under test.
#ifndef VSR_TESTS_ORACLES_HPP
#define VSR_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "vsr/image.hpp"
#include "vsr/weight_field.hpp"

namespace oracle {

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

// (dx,dy) offsets, same documented order as the library.
inline const int kDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
inline const int kDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

inline double pixel(const vsr::Image& img, int x, int y) {
    return img.at(clampi(x, 0, img.width() - 1), clampi(y, 0, img.height() - 1));
}

inline std::vector<double> residual(const vsr::Image& img, const vsr::WeightField& w) {
    std::vector<double> r(img.size());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            double s = 0.0;
            for (int i = 0; i < 8; ++i)
                s += w.plane(i)[std::size_t(y) * img.width() + x] *
                     pixel(img, x + kDx[i], y + kDy[i]);
            r[std::size_t(y) * img.width() + x] = s - img.at(x, y);
        }
    return r;
}

inline double fidelity_energy(const vsr::Image& img, const vsr::WeightField& w) {
    double e = 0.0;
    for (double v : oracle::residual(img, w)) e += v * v;
    return e;
}

// Fidelity energy accumulated in extended precision. Central differences of
// the (quadratic) fidelity term are exact, so the only error left in a
// gradient check is summation noise; long double keeps it ~1e-18.
inline long double fidelity_energy_ld(const vsr::Image& img, const vsr::WeightField& w) {
    long double e = 0.0L;
    std::vector<double> r = oracle::residual(img, w);
    for (double v : r) e += static_cast<long double>(v) * v;
    return e;
}

inline double tv_energy(const vsr::WeightField& w, double eps) {
    double e = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int y = 0; y < w.height(); ++y)
            for (int x = 0; x < w.width(); ++x) {
                const std::size_t idx = std::size_t(y) * w.width() + x;
                double gx = 0.0, gy = 0.0;
                if (x + 1 < w.width()) gx = w.plane(i)[idx + 1] - w.plane(i)[idx];
                if (y + 1 < w.height()) gy = w.plane(i)[idx + w.width()] - w.plane(i)[idx];
                e += std::sqrt(gx * gx + gy * gy + eps * eps);
            }
    return e;
}

inline std::vector<double> tv_curvature(const std::vector<double>& p, int w, int h,
                                        double eps) {
    auto flux = [&](int x, int y, int axis) -> double {
        if (x < 0 || y < 0) return 0.0;
        const std::size_t idx = std::size_t(y) * w + x;
        double gx = x + 1 < w ? p[idx + 1] - p[idx] : 0.0;
        double gy = y + 1 < h ? p[idx + w] - p[idx] : 0.0;
        double g = std::sqrt(gx * gx + gy * gy + eps * eps);
        return (axis == 0 ? gx : gy) / g;
    };
    std::vector<double> out(p.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out[std::size_t(y) * w + x] = flux(x, y, 0) - flux(x - 1, y, 0) +
                                          flux(x, y, 1) - flux(x, y - 1, 1);
    return out;
}

// Digital TV filter coefficients straight from the definition: affinity
// 1/g(x) + 1/g(neighbor), normalized with the fitting anchor.
struct TvCoeffs {
    std::vector<std::vector<double>> h;  // 8 planes
    std::vector<double> h0;
};

inline TvCoeffs tv_filter_coeffs(const vsr::Image& img, double lambda_fit, double eps) {
    const int w = img.width(), h = img.height();
    std::vector<double> g(std::size_t(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double gx = (pixel(img, x + 1, y) - pixel(img, x - 1, y)) / 2.0;
            double gy = (pixel(img, x, y + 1) - pixel(img, x, y - 1)) / 2.0;
            g[std::size_t(y) * w + x] = std::sqrt(gx * gx + gy * gy + eps * eps);
        }
    TvCoeffs c;
    c.h.assign(8, std::vector<double>(g.size()));
    c.h0.assign(g.size(), 0.0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = std::size_t(y) * w + x;
            double aff[8], sum = 0.0;
            for (int i = 0; i < 8; ++i) {
                const std::size_t nidx =
                    std::size_t(clampi(y + kDy[i], 0, h - 1)) * w + clampi(x + kDx[i], 0, w - 1);
                aff[i] = 1.0 / g[idx] + 1.0 / g[nidx];
                sum += aff[i];
            }
            for (int i = 0; i < 8; ++i) c.h[i][idx] = aff[i] / (lambda_fit + sum);
            c.h0[idx] = lambda_fit / (lambda_fit + sum);
        }
    return c;
}

inline vsr::Image sobel_magnitude(const vsr::Image& img) {
    static const int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    static const int ky[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};
    vsr::Image out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            double gx = 0.0, gy = 0.0;
            for (int j = 0; j < 3; ++j)
                for (int i = 0; i < 3; ++i) {
                    const double v = pixel(img, x + i - 1, y + j - 1);
                    gx += kx[j][i] * v;
                    gy += ky[j][i] * v;
                }
            out.at(x, y) = std::sqrt(gx * gx + gy * gy);
        }
    return out;
}

inline double mse(const vsr::Image& a, const vsr::Image& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.pixels()[i] - b.pixels()[i];
        acc += d * d;
    }
    return acc / double(a.size());
}

// Catmull-Rom kernel from its piecewise definition.
inline double cubic_kernel(double t) {
    const double a = -0.5;
    t = std::fabs(t);
    if (t <= 1.0) return (a + 2.0) * t * t * t - (a + 3.0) * t * t + 1.0;
    if (t < 2.0) return a * t * t * t - 5.0 * a * t * t + 8.0 * a * t - 4.0 * a;
    return 0.0;
}

// ---- random inputs ----

inline vsr::Image random_image(std::mt19937& rng, int w, int h, double lo = 0.0,
                               double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    vsr::Image img(w, h);
    for (double& v : img.pixels()) v = dist(rng);
    return img;
}

inline vsr::WeightField random_weights(std::mt19937& rng, int w, int h, double lo = -0.5,
                                       double hi = 0.5) {
    std::uniform_real_distribution<double> dist(lo, hi);
    vsr::WeightField field(w, h);
    for (int i = 0; i < 8; ++i)
        for (double& v : field.plane(i)) v = dist(rng);
    return field;
}

inline double rel_err(double got, double want) {
    const double denom = std::max(std::fabs(want), 1e-30);
    return std::fabs(got - want) / denom;
}

}  // namespace oracle

#endif  // VSR_TESTS_ORACLES_HPP
