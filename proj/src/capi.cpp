#include "vsr.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "vsr/analysis.hpp"
#include "vsr/baselines.hpp"
#include "vsr/errors.hpp"
#include "vsr/image.hpp"
#include "vsr/pgm_io.hpp"
#include "vsr/pipeline.hpp"
#include "vsr/solver.hpp"
#include "vsr/weight_field.hpp"

struct vsr_image {
    vsr::Image img;
};

struct vsr_weight_field {
    vsr::WeightField field;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* msg) { g_last_error = msg; }

template <class Fn>
vsr_status guarded(Fn&& fn) {
    try {
        fn();
        return VSR_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return VSR_ERROR_INVALID_ARGUMENT;
    } catch (const vsr::IoError& e) {
        set_error(e.what());
        return VSR_ERROR_IO;
    } catch (const vsr::FormatError& e) {
        set_error(e.what());
        return VSR_ERROR_FORMAT;
    } catch (const vsr::NumericError& e) {
        set_error(e.what());
        return VSR_ERROR_NUMERIC;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return VSR_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return VSR_ERROR_INTERNAL;
    }
}

vsr_status require(bool ok, const char* msg) {
    if (ok) return VSR_OK;
    set_error(msg);
    return VSR_ERROR_INVALID_ARGUMENT;
}

vsr::SolverConfig to_cpp(const vsr_solver_config* cfg) {
    vsr::SolverConfig out;
    if (cfg) {
        out.lambda = cfg->lambda;
        out.dt = cfg->dt;
        out.eps = cfg->eps;
        out.max_iters = cfg->max_iters;
        out.stop_tol = cfg->stop_tol;
    }
    return out;
}

vsr::SRConfig to_cpp(const vsr_sr_config* cfg) {
    vsr::SRConfig out;
    if (cfg) {
        out.zoom = cfg->zoom;
        out.solver = to_cpp(&cfg->solver);
        out.init_method = static_cast<vsr::InitMethod>(cfg->init_method);
        out.renormalize_weights = cfg->renormalize_weights != 0;
        out.renorm_floor = cfg->renorm_floor;
    }
    return out;
}

vsr::TvFilterConfig to_cpp(const vsr_tv_filter_config* cfg) {
    vsr::TvFilterConfig out;
    if (cfg) {
        out.lambda_fit = cfg->lambda_fit;
        out.eps = cfg->eps;
        out.max_iters = cfg->max_iters;
        out.stop_tol = cfg->stop_tol;
    }
    return out;
}

vsr_status wrap_image(vsr::Image img, vsr_image** out) {
    *out = new vsr_image{std::move(img)};
    return VSR_OK;
}

}  // namespace

extern "C" {

const char* vsr_last_error(void) { return g_last_error.c_str(); }

vsr_status vsr_image_create(int32_t width, int32_t height, const double* data,
                            vsr_image** out) {
    if (vsr_status s = require(data && out, "null pointer argument")) return s;
    return guarded([&] {
        std::vector<double> pixels(data, data + static_cast<std::size_t>(width) * height);
        wrap_image(vsr::Image(width, height, std::move(pixels)), out);
    });
}

vsr_status vsr_image_load_pgm(const char* path, vsr_image** out) {
    if (vsr_status s = require(path && out, "null pointer argument")) return s;
    return guarded([&] { wrap_image(vsr::load_pgm(path), out); });
}

vsr_status vsr_image_save_pgm(const vsr_image* img, const char* path, int32_t maxval) {
    if (vsr_status s = require(img && path, "null pointer argument")) return s;
    return guarded([&] { vsr::save_pgm(img->img, path, maxval); });
}

int32_t vsr_image_width(const vsr_image* img) { return img ? img->img.width() : 0; }
int32_t vsr_image_height(const vsr_image* img) { return img ? img->img.height() : 0; }

const double* vsr_image_data(const vsr_image* img) {
    return img ? img->img.pixels().data() : nullptr;
}

void vsr_image_free(vsr_image* img) { delete img; }

void vsr_solver_config_init(vsr_solver_config* cfg) {
    const vsr::SolverConfig d;
    cfg->lambda = d.lambda;
    cfg->dt = d.dt;
    cfg->eps = d.eps;
    cfg->max_iters = d.max_iters;
    cfg->stop_tol = d.stop_tol;
}

void vsr_sr_config_init(vsr_sr_config* cfg) {
    const vsr::SRConfig d;
    cfg->zoom = d.zoom;
    vsr_solver_config_init(&cfg->solver);
    cfg->init_method = VSR_INIT_NEAREST;
    cfg->renormalize_weights = d.renormalize_weights ? 1 : 0;
    cfg->renorm_floor = d.renorm_floor;
}

void vsr_tv_filter_config_init(vsr_tv_filter_config* cfg) {
    const vsr::TvFilterConfig d;
    cfg->lambda_fit = d.lambda_fit;
    cfg->eps = d.eps;
    cfg->max_iters = d.max_iters;
    cfg->stop_tol = d.stop_tol;
}

vsr_status vsr_downsample_block(const vsr_image* img, int32_t zoom, vsr_image** out) {
    if (vsr_status s = require(img && out, "null pointer argument")) return s;
    return guarded([&] { wrap_image(vsr::downsample_block(img->img, zoom), out); });
}

vsr_status vsr_upscale_nearest(const vsr_image* img, int32_t zoom, vsr_image** out) {
    if (vsr_status s = require(img && out, "null pointer argument")) return s;
    return guarded([&] { wrap_image(vsr::upscale_nearest(img->img, zoom), out); });
}

vsr_status vsr_upscale_bilinear(const vsr_image* img, int32_t zoom, vsr_image** out) {
    if (vsr_status s = require(img && out, "null pointer argument")) return s;
    return guarded([&] { wrap_image(vsr::upscale_bilinear(img->img, zoom), out); });
}

vsr_status vsr_upscale_bicubic(const vsr_image* img, int32_t zoom, vsr_image** out) {
    if (vsr_status s = require(img && out, "null pointer argument")) return s;
    return guarded([&] { wrap_image(vsr::upscale_bicubic(img->img, zoom), out); });
}

vsr_status vsr_tv_filter_upscale(const vsr_image* img, int32_t zoom,
                                 const vsr_tv_filter_config* cfg, vsr_image** out) {
    if (vsr_status s = require(img && out, "null pointer argument")) return s;
    return guarded([&] {
        wrap_image(vsr::tv_filter_upscale(img->img, zoom, to_cpp(cfg)), out);
    });
}

vsr_status vsr_super_resolve(const vsr_image* lr, const vsr_sr_config* cfg,
                             vsr_image** out, int32_t* iters_run, double* final_energy) {
    if (vsr_status s = require(lr && out, "null pointer argument")) return s;
    return guarded([&] {
        vsr::SRResult res = vsr::super_resolve(lr->img, to_cpp(cfg));
        if (iters_run) *iters_run = res.iters_run;
        if (final_energy) *final_energy = res.final_energy;
        wrap_image(std::move(res.image), out);
    });
}

vsr_status vsr_estimate_weights(const vsr_image* img, const vsr_solver_config* cfg,
                                vsr_weight_field** out, int32_t* iters_run,
                                double* final_energy) {
    if (vsr_status s = require(img && out, "null pointer argument")) return s;
    return guarded([&] {
        vsr::SolveResult res = vsr::estimate_weights(img->img, to_cpp(cfg));
        if (iters_run) *iters_run = res.iters_run;
        if (final_energy) *final_energy = res.final_energy;
        *out = new vsr_weight_field{std::move(res.weights)};
    });
}

int32_t vsr_weight_field_width(const vsr_weight_field* w) {
    return w ? w->field.width() : 0;
}

int32_t vsr_weight_field_height(const vsr_weight_field* w) {
    return w ? w->field.height() : 0;
}

int32_t vsr_weight_field_planes(const vsr_weight_field* w) {
    return w ? w->field.plane_count() : 0;
}

const double* vsr_weight_field_plane(const vsr_weight_field* w, int32_t plane) {
    if (!w || plane < 0 || plane >= w->field.plane_count()) return nullptr;
    return w->field.plane(plane).data();
}

vsr_status vsr_weight_field_save(const vsr_weight_field* w, const char* path) {
    if (vsr_status s = require(w && path, "null pointer argument")) return s;
    return guarded([&] { vsr::save_vwf(w->field, path); });
}

vsr_status vsr_weight_field_load(const char* path, vsr_weight_field** out) {
    if (vsr_status s = require(path && out, "null pointer argument")) return s;
    return guarded([&] { *out = new vsr_weight_field{vsr::load_vwf(path)}; });
}

void vsr_weight_field_free(vsr_weight_field* w) { delete w; }

vsr_status vsr_mse(const vsr_image* a, const vsr_image* b, double* out) {
    if (vsr_status s = require(a && b && out, "null pointer argument")) return s;
    return guarded([&] { *out = vsr::mse(a->img, b->img); });
}

vsr_status vsr_psnr(const vsr_image* a, const vsr_image* b, double* out) {
    if (vsr_status s = require(a && b && out, "null pointer argument")) return s;
    return guarded([&] { *out = vsr::psnr(a->img, b->img); });
}

vsr_status vsr_sobel_magnitude(const vsr_image* img, vsr_image** out) {
    if (vsr_status s = require(img && out, "null pointer argument")) return s;
    return guarded([&] { wrap_image(vsr::sobel_magnitude(img->img), out); });
}

vsr_status vsr_edge_count(const vsr_image* magnitude, double threshold, int64_t* out) {
    if (vsr_status s = require(magnitude && out, "null pointer argument")) return s;
    return guarded([&] { *out = vsr::edge_count(magnitude->img, threshold); });
}

vsr_status vsr_compare(const vsr_image* hr_ref, int32_t zoom, const char* methods_csv,
                       double sobel_threshold, const vsr_sr_config* sr_cfg,
                       const vsr_tv_filter_config* tv_cfg, const char* reference_name,
                       const char* report_path, char** table_out) {
    if (vsr_status s = require(hr_ref && methods_csv, "null pointer argument")) return s;
    return guarded([&] {
        std::vector<std::string> methods;
        std::stringstream ss(methods_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) methods.push_back(item);
        if (methods.empty()) throw std::invalid_argument("empty method list");

        vsr::CompareReport report =
            vsr::compare(hr_ref->img, zoom, methods, sobel_threshold, to_cpp(sr_cfg),
                         to_cpp(tv_cfg), reference_name ? reference_name : "");
        if (report_path) {
            std::ofstream out(report_path, std::ios::trunc);
            if (!out) throw vsr::IoError(std::string(report_path) + ": cannot open file for writing");
            out << vsr::render_records(report);
            if (!out) throw vsr::IoError(std::string(report_path) + ": write failed");
        }
        if (table_out) {
            const std::string table = vsr::render_table(report);
            char* buf = static_cast<char*>(std::malloc(table.size() + 1));
            if (!buf) throw std::bad_alloc();
            std::memcpy(buf, table.c_str(), table.size() + 1);
            *table_out = buf;
        }
    });
}

void vsr_string_free(char* s) { std::free(s); }

}  // extern "C"
