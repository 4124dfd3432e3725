#ifndef VSR_PIPELINE_HPP
#define VSR_PIPELINE_HPP

#include "vsr/image.hpp"
#include "vsr/solver.hpp"
#include "vsr/weight_field.hpp"

namespace vsr {

enum class InitMethod {
    kNearest,
    kBilinear,
    kBicubic,
};

struct SRConfig {
    int zoom = 3;
    SolverConfig solver;
    InitMethod init_method = InitMethod::kNearest;
    bool renormalize_weights = false;
    double renorm_floor = 1e-6;
};

// Bilinearly upsamples each plane independently with the shared pixel-center
// mapping. The anchor plane, when present, is upsampled too.
WeightField upsample_weight_field(const WeightField& w, int z);

// One pass of u'(x) = sum_i w_i(x) hr_init(x+delta_i), replicate boundary,
// no clamping. Dimensions must match.
Image apply_adaptive_filter(const Image& hr_init, const WeightField& w_hr);

struct SRResult {
    Image image;
    int iters_run = 0;
    double final_energy = 0.0;
};

// Full pipeline: estimate weights on the low-resolution input, optionally
// renormalize, bilinearly upsample the planes, build the initial
// high-resolution estimate, apply the adaptive filter once, then clamp the
// result to [0,1]. Requires at least a 2x2 input.
SRResult super_resolve(const Image& lr, const SRConfig& cfg);

}  // namespace vsr

#endif  // VSR_PIPELINE_HPP
