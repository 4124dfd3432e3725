#ifndef VSR_BASELINES_HPP
#define VSR_BASELINES_HPP

#include <utility>

#include "vsr/image.hpp"
#include "vsr/weight_field.hpp"

namespace vsr {

struct TvFilterConfig {
    double lambda_fit = 1.0;  // weight of the anchor to the original image
    double eps = 1e-4;        // gradient regularization floor
    int max_iters = 200;
    double stop_tol = 1e-6;   // stop when max |pixel update| drops below this
};

// Output pixel (X,Y) = input (X/z, Y/z), integer division.
Image upscale_nearest(const Image& img, int z);

// Pixel-center mapping: source coordinate s = (X+0.5)/z - 0.5 per axis,
// clamped to the valid range, then a bilinear blend of the 4 neighbors.
Image upscale_bilinear(const Image& img, int z);

// Same plane-wise resampler as upscale_bilinear, shared with the weight
// upsampling in the pipeline so all methods use one coordinate convention.
void upscale_bilinear_plane(const double* src, int width, int height, int z,
                            double* dst);

// Separable cubic convolution with the Catmull-Rom kernel (a = -0.5),
// pixel-center mapping, replicate boundary. Values may overshoot the input
// range; nothing is clamped here.
Image upscale_bicubic(const Image& img, int z);

// Catmull-Rom kernel value at offset t.
double catmull_rom(double t);

// Normalized neighbor affinities from the local gradient: with
// g = sqrt(|grad u|^2 + eps^2) (central differences, replicate boundary) and
// affinity a_i(x) = 1/g(x) + 1/g(x+delta_i),
//   h_i(x) = a_i / (lambda_fit + sum_j a_j),  anchor h_0 = lambda_fit / (...).
// The returned field carries the anchor plane.
WeightField tv_filter_coeffs(const Image& img, const TvFilterConfig& cfg);

// One filtering pass: u'(x) = sum_i h_i(x) u(x+delta_i) + h_0(x) u0(x),
// with coefficients computed from u. Iterates are clamped to the value range
// of u0, which the exact convex combination never leaves.
// Returns the new image and max |pixel update|.
std::pair<Image, double> tv_filter_step(const Image& u, const Image& u0,
                                        const TvFilterConfig& cfg);

// Repeats tv_filter_step, recomputing coefficients from the current iterate
// and anchoring to the original u0, until max |update| < stop_tol or
// max_iters.
Image tv_filter(const Image& u0, const TvFilterConfig& cfg);

// Nearest-neighbor upscale followed by tv_filter.
Image tv_filter_upscale(const Image& img, int z, const TvFilterConfig& cfg);

}  // namespace vsr

#endif  // VSR_BASELINES_HPP
