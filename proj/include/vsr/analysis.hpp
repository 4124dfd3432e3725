#ifndef VSR_ANALYSIS_HPP
#define VSR_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vsr/baselines.hpp"
#include "vsr/image.hpp"
#include "vsr/pipeline.hpp"

namespace vsr {

// Mean squared error on the [0,1] scale.
double mse(const Image& a, const Image& b);

// 10*log10(1/mse) in dB on the [0,1] scale (identical to the 8-bit
// MAX=255 convention). Returns +infinity when the images are identical.
double psnr(const Image& a, const Image& b);

// Gradient magnitude from the standard 3x3 Sobel kernels, replicate boundary.
Image sobel_magnitude(const Image& img);

// Number of pixels with magnitude strictly greater than threshold.
std::int64_t edge_count(const Image& magnitude, double threshold);

struct CompareRow {
    std::string method;
    double psnr_db = 0.0;        // +infinity marks identical images
    std::int64_t edge_count = 0;
    double wall_time_s = 0.0;
};

struct CompareReport {
    std::string reference;
    int zoom = 0;
    double sobel_threshold = 0.0;
    std::vector<CompareRow> rows;
};

inline constexpr double kDefaultSobelThreshold = 0.25;

// Synthesizes the low-resolution input by block-average downsampling,
// reconstructs it with each requested method (ours, bicubic, bilinear,
// nearest, tv), and scores PSNR against the reference plus the Sobel edge
// count at the shared threshold. Outputs are clamped to [0,1] before
// scoring, matching what would be written to a file. Rows keep the
// requested order.
CompareReport compare(const Image& hr_ref, int zoom,
                      const std::vector<std::string>& methods,
                      double sobel_threshold, const SRConfig& sr_cfg,
                      const TvFilterConfig& tv_cfg,
                      const std::string& reference_name);

// Human-readable aligned table.
std::string render_table(const CompareReport& report);

// Machine-readable records, one "key=value" line per method.
std::string render_records(const CompareReport& report);

}  // namespace vsr

#endif  // VSR_ANALYSIS_HPP
