#include "vsr/analysis.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace vsr {

double mse(const Image& a, const Image& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("mse: image dimensions do not match");
    double acc = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a.pixels()[i] - b.pixels()[i];
        acc += d * d;
    }
    return acc / static_cast<double>(n);
}

double psnr(const Image& a, const Image& b) {
    const double m = mse(a, b);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / m);
}

Image sobel_magnitude(const Image& img) {
    Image out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            const double gx = (img.at_clamped(x + 1, y - 1) + 2.0 * img.at_clamped(x + 1, y) +
                               img.at_clamped(x + 1, y + 1)) -
                              (img.at_clamped(x - 1, y - 1) + 2.0 * img.at_clamped(x - 1, y) +
                               img.at_clamped(x - 1, y + 1));
            const double gy = (img.at_clamped(x - 1, y + 1) + 2.0 * img.at_clamped(x, y + 1) +
                               img.at_clamped(x + 1, y + 1)) -
                              (img.at_clamped(x - 1, y - 1) + 2.0 * img.at_clamped(x, y - 1) +
                               img.at_clamped(x + 1, y - 1));
            out.at(x, y) = std::sqrt(gx * gx + gy * gy);
        }
    return out;
}

std::int64_t edge_count(const Image& magnitude, double threshold) {
    if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
    std::int64_t count = 0;
    for (double v : magnitude.pixels())
        if (v > threshold) ++count;
    return count;
}

namespace {

Image run_method(const std::string& method, const Image& lr, int zoom,
                 const SRConfig& sr_cfg, const TvFilterConfig& tv_cfg) {
    if (method == "ours") return super_resolve(lr, sr_cfg).image;
    if (method == "bicubic") return upscale_bicubic(lr, zoom);
    if (method == "bilinear") return upscale_bilinear(lr, zoom);
    if (method == "nearest") return upscale_nearest(lr, zoom);
    if (method == "tv") return tv_filter_upscale(lr, zoom, tv_cfg);
    throw std::invalid_argument("unknown method '" + method + "'");
}

std::string format_psnr(double v) {
    if (std::isinf(v)) return "identical";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

CompareReport compare(const Image& hr_ref, int zoom,
                      const std::vector<std::string>& methods,
                      double sobel_threshold, const SRConfig& sr_cfg,
                      const TvFilterConfig& tv_cfg,
                      const std::string& reference_name) {
    SRConfig cfg = sr_cfg;
    cfg.zoom = zoom;
    const Image lr = downsample_block(hr_ref, zoom);

    CompareReport report;
    report.reference = reference_name;
    report.zoom = zoom;
    report.sobel_threshold = sobel_threshold;

    for (const std::string& method : methods) {
        const auto t0 = std::chrono::steady_clock::now();
        Image result = run_method(method, lr, zoom, cfg, tv_cfg);
        for (double& v : result.pixels()) {
            if (v < 0.0) v = 0.0;
            if (v > 1.0) v = 1.0;
        }
        CompareRow row;
        row.method = method;
        row.psnr_db = psnr(result, hr_ref);
        row.edge_count = edge_count(sobel_magnitude(result), sobel_threshold);
        row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string render_table(const CompareReport& report) {
    char buf[160];
    std::string out;
    std::snprintf(buf, sizeof buf, "reference: %s  zoom: %d  sobel threshold: %g\n",
                  report.reference.c_str(), report.zoom, report.sobel_threshold);
    out += buf;
    std::snprintf(buf, sizeof buf, "%-10s %12s %10s %10s\n", "method", "psnr_db",
                  "edges", "time_s");
    out += buf;
    for (const CompareRow& row : report.rows) {
        std::snprintf(buf, sizeof buf, "%-10s %12s %10lld %10.3f\n", row.method.c_str(),
                      format_psnr(row.psnr_db).c_str(),
                      static_cast<long long>(row.edge_count), row.wall_time_s);
        out += buf;
    }
    return out;
}

std::string render_records(const CompareReport& report) {
    char buf[200];
    std::string out;
    std::snprintf(buf, sizeof buf, "reference=%s zoom=%d sobel_threshold=%.6f\n",
                  report.reference.c_str(), report.zoom, report.sobel_threshold);
    out += buf;
    for (const CompareRow& row : report.rows) {
        std::snprintf(buf, sizeof buf,
                      "method=%s psnr_db=%s edge_count=%lld wall_time_s=%.3f\n",
                      row.method.c_str(), format_psnr(row.psnr_db).c_str(),
                      static_cast<long long>(row.edge_count), row.wall_time_s);
        out += buf;
    }
    return out;
}

}  // namespace vsr
