#include "vsr/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vsr/errors.hpp"

namespace vsr {

namespace {

void check_zoom(int z) {
    if (z < 2) throw std::invalid_argument("zoom factor must be >= 2");
}

double lerp(double a, double b, double t) { return a + t * (b - a); }

// Pixel-center source coordinate for output index X, clamped to the grid.
double source_coord(int X, int z, int n) {
    double s = (X + 0.5) / z - 0.5;
    if (s < 0.0) s = 0.0;
    const double last = n - 1;
    if (s > last) s = last;
    return s;
}

}  // namespace

Image upscale_nearest(const Image& img, int z) {
    check_zoom(z);
    Image out(img.width() * z, img.height() * z);
    for (int Y = 0; Y < out.height(); ++Y)
        for (int X = 0; X < out.width(); ++X)
            out.at(X, Y) = img.at(X / z, Y / z);
    return out;
}

void upscale_bilinear_plane(const double* src, int width, int height, int z,
                            double* dst) {
    const int out_w = width * z, out_h = height * z;
    for (int Y = 0; Y < out_h; ++Y) {
        const double sy = source_coord(Y, z, height);
        const int y0 = static_cast<int>(sy);
        const int y1 = std::min(y0 + 1, height - 1);
        const double fy = sy - y0;
        for (int X = 0; X < out_w; ++X) {
            const double sx = source_coord(X, z, width);
            const int x0 = static_cast<int>(sx);
            const int x1 = std::min(x0 + 1, width - 1);
            const double fx = sx - x0;
            const double* row0 = src + static_cast<std::size_t>(y0) * width;
            const double* row1 = src + static_cast<std::size_t>(y1) * width;
            // Nested lerps keep constants exact.
            dst[static_cast<std::size_t>(Y) * out_w + X] =
                lerp(lerp(row0[x0], row0[x1], fx), lerp(row1[x0], row1[x1], fx), fy);
        }
    }
}

Image upscale_bilinear(const Image& img, int z) {
    check_zoom(z);
    Image out(img.width() * z, img.height() * z);
    upscale_bilinear_plane(img.pixels().data(), img.width(), img.height(), z,
                           out.pixels().data());
    return out;
}

double catmull_rom(double t) {
    constexpr double a = -0.5;
    t = std::fabs(t);
    if (t <= 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
    if (t < 2.0) return ((a * t - 5.0 * a) * t + 8.0 * a) * t - 4.0 * a;
    return 0.0;
}

Image upscale_bicubic(const Image& img, int z) {
    check_zoom(z);
    const int w = img.width(), h = img.height();
    Image out(w * z, h * z);
    for (int Y = 0; Y < out.height(); ++Y) {
        const double sy = source_coord(Y, z, h);
        const int y0 = static_cast<int>(sy);
        const double fy = sy - y0;
        const double wy[4] = {catmull_rom(1.0 + fy), catmull_rom(fy),
                              catmull_rom(1.0 - fy), catmull_rom(2.0 - fy)};
        int ys[4];
        for (int k = 0; k < 4; ++k) ys[k] = clamp_index(y0 - 1 + k, h);
        for (int X = 0; X < out.width(); ++X) {
            const double sx = source_coord(X, z, w);
            const int x0 = static_cast<int>(sx);
            const double fx = sx - x0;
            const double wx[4] = {catmull_rom(1.0 + fx), catmull_rom(fx),
                                  catmull_rom(1.0 - fx), catmull_rom(2.0 - fx)};
            int xs[4];
            for (int k = 0; k < 4; ++k) xs[k] = clamp_index(x0 - 1 + k, w);

            // Anchoring each tap sum at the floor cell exploits the kernel's
            // unit sum, so constant inputs come through bit-exactly.
            double rows[4];
            for (int j = 0; j < 4; ++j) {
                const double anchor = img.at(xs[1], ys[j]);
                double acc = anchor;
                for (int i = 0; i < 4; ++i)
                    acc += wx[i] * (img.at(xs[i], ys[j]) - anchor);
                rows[j] = acc;
            }
            double v = rows[1];
            for (int j = 0; j < 4; ++j) v += wy[j] * (rows[j] - rows[1]);
            out.at(X, Y) = v;
        }
    }
    return out;
}

WeightField tv_filter_coeffs(const Image& img, const TvFilterConfig& cfg) {
    if (!(cfg.eps > 0.0) || cfg.lambda_fit < 0.0)
        throw std::invalid_argument("invalid TV filter configuration");
    const int w = img.width(), h = img.height();

    // Inverse regularized gradient magnitude, central differences.
    std::vector<double> inv_g(img.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double gx = (img.at_clamped(x + 1, y) - img.at_clamped(x - 1, y)) * 0.5;
            const double gy = (img.at_clamped(x, y + 1) - img.at_clamped(x, y - 1)) * 0.5;
            inv_g[static_cast<std::size_t>(y) * w + x] =
                1.0 / std::sqrt(gx * gx + gy * gy + cfg.eps * cfg.eps);
        }

    WeightField coeffs(w, h, /*with_anchor=*/true);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            double aff[8];
            double sum = 0.0;
            for (int i = 0; i < 8; ++i) {
                const Offset& d = kNeighborOffsets[i];
                const std::size_t nidx =
                    static_cast<std::size_t>(clamp_index(y + d.dy, h)) * w +
                    clamp_index(x + d.dx, w);
                aff[i] = inv_g[idx] + inv_g[nidx];
                sum += aff[i];
            }
            const double denom = cfg.lambda_fit + sum;
            for (int i = 0; i < 8; ++i) coeffs.plane(i)[idx] = aff[i] / denom;
            coeffs.anchor()[idx] = cfg.lambda_fit / denom;
        }
    return coeffs;
}

std::pair<Image, double> tv_filter_step(const Image& u, const Image& u0,
                                        const TvFilterConfig& cfg) {
    if (!u.same_shape(u0))
        throw std::invalid_argument("iterate and anchor image dimensions do not match");
    const WeightField coeffs = tv_filter_coeffs(u, cfg);
    const int w = u.width(), h = u.height();

    const auto [lo_it, hi_it] = std::minmax_element(u0.pixels().begin(), u0.pixels().end());
    const double lo = *lo_it, hi = *hi_it;

    Image next(w, h);
    double max_update = 0.0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            const double uc = u.at(x, y);
            // Difference form of the convex combination: constants are fixed
            // points bit-for-bit.
            double v = uc;
            for (int i = 0; i < 8; ++i)
                v += coeffs.plane(i)[idx] * (neighbor_value(u, x, y, i) - uc);
            v += coeffs.anchor()[idx] * (u0.at(x, y) - uc);
            if (!std::isfinite(v))
                throw NumericError("non-finite TV filter iterate (degenerate config?)");
            // The exact combination never leaves [lo,hi]; pin down rounding.
            v = std::clamp(v, lo, hi);
            next.at(x, y) = v;
            const double mag = std::fabs(v - uc);
            if (mag > max_update) max_update = mag;
        }
    return {std::move(next), max_update};
}

Image tv_filter(const Image& u0, const TvFilterConfig& cfg) {
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    Image u = u0;
    for (int t = 0; t < cfg.max_iters; ++t) {
        auto [next, max_update] = tv_filter_step(u, u0, cfg);
        u = std::move(next);
        if (max_update < cfg.stop_tol) break;
    }
    return u;
}

Image tv_filter_upscale(const Image& img, int z, const TvFilterConfig& cfg) {
    return tv_filter(upscale_nearest(img, z), cfg);
}

}  // namespace vsr
