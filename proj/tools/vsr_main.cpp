// Command-line front end for the variational super-resolution library.
// Talks to the library exclusively through the C API in vsr.h.

#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vsr.h"

namespace {

// Exit codes: 0 success, 1 usage error, 2 IO error, 3 numeric failure.
int exit_code_for(vsr_status status) {
    switch (status) {
        case VSR_OK: return 0;
        case VSR_ERROR_INVALID_ARGUMENT: return 1;
        case VSR_ERROR_IO: return 2;
        case VSR_ERROR_FORMAT: return 2;
        case VSR_ERROR_NUMERIC: return 3;
        default: return 3;
    }
}

int fail(vsr_status status) {
    std::fprintf(stderr, "vsr: %s\n", vsr_last_error());
    return exit_code_for(status);
}

struct ImageHandle {
    vsr_image* ptr = nullptr;
    ~ImageHandle() { vsr_image_free(ptr); }
};

struct WeightHandle {
    vsr_weight_field* ptr = nullptr;
    ~WeightHandle() { vsr_weight_field_free(ptr); }
};

vsr_init_method parse_init(const std::string& name) {
    if (name == "bilinear") return VSR_INIT_BILINEAR;
    if (name == "bicubic") return VSR_INIT_BICUBIC;
    return VSR_INIT_NEAREST;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-image super-resolution by variational neighbor-weight estimation"};
    app.require_subcommand(1);

    vsr_sr_config sr_cfg;
    vsr_sr_config_init(&sr_cfg);
    vsr_tv_filter_config tv_cfg;
    vsr_tv_filter_config_init(&tv_cfg);

    int zoom = sr_cfg.zoom;
    double lambda = sr_cfg.solver.lambda;
    double dt = sr_cfg.solver.dt;
    double eps = sr_cfg.solver.eps;
    int iters = sr_cfg.solver.max_iters;
    double tol = sr_cfg.solver.stop_tol;
    std::string init = "nearest";
    bool renormalize = false;
    double renorm_floor = sr_cfg.renorm_floor;
    double tv_lambda = tv_cfg.lambda_fit;
    double tv_eps = tv_cfg.eps;
    int tv_iters = tv_cfg.max_iters;
    double tv_tol = tv_cfg.stop_tol;
    double threshold = VSR_DEFAULT_SOBEL_THRESHOLD;
    int threads = 1;
    std::string method = "ours";
    std::string methods = "ours,bicubic,bilinear,nearest,tv";
    std::string input, output;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "Fidelity weight of the weight solver")
            ->capture_default_str();
        cmd->add_option("--dt", dt, "Solver time step")->capture_default_str();
        cmd->add_option("--eps", eps, "Solver TV regularization floor")
            ->capture_default_str();
        cmd->add_option("--iters", iters, "Solver iteration cap")->capture_default_str();
        cmd->add_option("--tol", tol, "Solver stopping tolerance (max-abs update)")
            ->capture_default_str();
    };
    auto add_tv_flags = [&](CLI::App* cmd) {
        cmd->add_option("--tv-lambda", tv_lambda, "TV filter fitting weight")
            ->capture_default_str();
        cmd->add_option("--tv-eps", tv_eps, "TV filter gradient regularization")
            ->capture_default_str();
        cmd->add_option("--tv-iters", tv_iters, "TV filter iteration cap")
            ->capture_default_str();
        cmd->add_option("--tv-tol", tv_tol, "TV filter stopping tolerance")
            ->capture_default_str();
    };
    auto add_threads_flag = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads,
                        "Worker thread count (reserved; never changes output bytes)")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };

    CLI::App* upscale = app.add_subcommand("upscale", "Upscale a PGM image");
    upscale->add_option("--method", method, "Reconstruction method")
        ->capture_default_str()
        ->check(CLI::IsMember({"ours", "bicubic", "bilinear", "nearest", "tv"}));
    upscale->add_option("--zoom", zoom, "Integer magnification ratio")
        ->capture_default_str();
    upscale->add_option("--init", init, "Initial HR estimate for --method ours")
        ->capture_default_str()
        ->check(CLI::IsMember({"nearest", "bilinear", "bicubic"}));
    upscale->add_flag("--renormalize", renormalize,
                      "Rescale each pixel's weights to sum to 1 before filtering");
    upscale->add_option("--renorm-floor", renorm_floor,
                        "Weight-sum floor below which a pixel resets to uniform")
        ->capture_default_str();
    add_solver_flags(upscale);
    add_tv_flags(upscale);
    add_threads_flag(upscale);
    upscale->add_option("input", input, "Input PGM")->required();
    upscale->add_option("output", output, "Output PGM")->required();

    CLI::App* weights = app.add_subcommand("weights", "Estimate neighbor weights and dump VWF1");
    add_solver_flags(weights);
    add_threads_flag(weights);
    weights->add_option("input", input, "Input PGM")->required();
    weights->add_option("output", output, "Output VWF1 file")->required();

    CLI::App* cmp = app.add_subcommand("compare", "Score methods against a reference image");
    cmp->add_option("--zoom", zoom, "Integer magnification ratio")->capture_default_str();
    cmp->add_option("--methods", methods, "Comma-separated method list")
        ->capture_default_str();
    cmp->add_option("--threshold", threshold, "Sobel edge threshold")
        ->capture_default_str();
    cmp->add_option("--init", init, "Initial HR estimate for ours")
        ->capture_default_str()
        ->check(CLI::IsMember({"nearest", "bilinear", "bicubic"}));
    cmp->add_flag("--renormalize", renormalize,
                  "Rescale each pixel's weights to sum to 1 before filtering");
    add_solver_flags(cmp);
    add_tv_flags(cmp);
    add_threads_flag(cmp);
    cmp->add_option("reference", input, "High-resolution reference PGM")->required();
    cmp->add_option("report", output, "Report output file")->required();

    CLI::App* down = app.add_subcommand("downsample", "Block-average downsample a PGM");
    down->add_option("--zoom", zoom, "Integer decimation factor")->capture_default_str();
    down->add_option("input", input, "Input PGM")->required();
    down->add_option("output", output, "Output PGM")->required();

    CLI::App* sobel = app.add_subcommand("sobel", "Write a binary Sobel edge map");
    sobel->add_option("--threshold", threshold, "Edge magnitude threshold")
        ->capture_default_str();
    sobel->add_option("input", input, "Input PGM")->required();
    sobel->add_option("output", output, "Output PGM edge map")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    sr_cfg.zoom = zoom;
    sr_cfg.solver.lambda = lambda;
    sr_cfg.solver.dt = dt;
    sr_cfg.solver.eps = eps;
    sr_cfg.solver.max_iters = iters;
    sr_cfg.solver.stop_tol = tol;
    sr_cfg.init_method = parse_init(init);
    sr_cfg.renormalize_weights = renormalize ? 1 : 0;
    sr_cfg.renorm_floor = renorm_floor;
    tv_cfg.lambda_fit = tv_lambda;
    tv_cfg.eps = tv_eps;
    tv_cfg.max_iters = tv_iters;
    tv_cfg.stop_tol = tv_tol;

    if (upscale->parsed()) {
        ImageHandle in;
        if (vsr_status s = vsr_image_load_pgm(input.c_str(), &in.ptr)) return fail(s);
        ImageHandle out;
        vsr_status s = VSR_OK;
        if (method == "ours") {
            int32_t iters_run = 0;
            double energy = 0.0;
            s = vsr_super_resolve(in.ptr, &sr_cfg, &out.ptr, &iters_run, &energy);
            if (s == VSR_OK)
                std::fprintf(stderr, "iters_run=%" PRId32 " final_energy=%.9g\n",
                             iters_run, energy);
        } else if (method == "bicubic") {
            s = vsr_upscale_bicubic(in.ptr, zoom, &out.ptr);
        } else if (method == "bilinear") {
            s = vsr_upscale_bilinear(in.ptr, zoom, &out.ptr);
        } else if (method == "nearest") {
            s = vsr_upscale_nearest(in.ptr, zoom, &out.ptr);
        } else {
            s = vsr_tv_filter_upscale(in.ptr, zoom, &tv_cfg, &out.ptr);
        }
        if (s != VSR_OK) return fail(s);
        if (vsr_status w = vsr_image_save_pgm(out.ptr, output.c_str(), 255)) return fail(w);
        return 0;
    }

    if (weights->parsed()) {
        ImageHandle in;
        if (vsr_status s = vsr_image_load_pgm(input.c_str(), &in.ptr)) return fail(s);
        WeightHandle field;
        int32_t iters_run = 0;
        double energy = 0.0;
        if (vsr_status s = vsr_estimate_weights(in.ptr, &sr_cfg.solver, &field.ptr,
                                                &iters_run, &energy))
            return fail(s);
        std::fprintf(stderr, "iters_run=%" PRId32 " final_energy=%.9g\n", iters_run, energy);
        if (vsr_status s = vsr_weight_field_save(field.ptr, output.c_str())) return fail(s);
        return 0;
    }

    if (cmp->parsed()) {
        ImageHandle ref;
        if (vsr_status s = vsr_image_load_pgm(input.c_str(), &ref.ptr)) return fail(s);
        char* table = nullptr;
        if (vsr_status s = vsr_compare(ref.ptr, zoom, methods.c_str(), threshold,
                                       &sr_cfg, &tv_cfg, input.c_str(),
                                       output.c_str(), &table))
            return fail(s);
        std::fputs(table, stdout);
        vsr_string_free(table);
        return 0;
    }

    if (down->parsed()) {
        ImageHandle in;
        if (vsr_status s = vsr_image_load_pgm(input.c_str(), &in.ptr)) return fail(s);
        ImageHandle out;
        if (vsr_status s = vsr_downsample_block(in.ptr, zoom, &out.ptr)) return fail(s);
        if (vsr_status s = vsr_image_save_pgm(out.ptr, output.c_str(), 255)) return fail(s);
        return 0;
    }

    if (sobel->parsed()) {
        ImageHandle in;
        if (vsr_status s = vsr_image_load_pgm(input.c_str(), &in.ptr)) return fail(s);
        ImageHandle mag;
        if (vsr_status s = vsr_sobel_magnitude(in.ptr, &mag.ptr)) return fail(s);
        int64_t count = 0;
        if (vsr_status s = vsr_edge_count(mag.ptr, threshold, &count)) return fail(s);

        // Binary edge map: 255 where magnitude > threshold.
        const int32_t w = vsr_image_width(mag.ptr), h = vsr_image_height(mag.ptr);
        std::vector<double> bin(static_cast<std::size_t>(w) * h);
        const double* data = vsr_image_data(mag.ptr);
        for (std::size_t i = 0; i < bin.size(); ++i)
            bin[i] = data[i] > threshold ? 1.0 : 0.0;
        ImageHandle map;
        if (vsr_status s = vsr_image_create(w, h, bin.data(), &map.ptr)) return fail(s);
        if (vsr_status s = vsr_image_save_pgm(map.ptr, output.c_str(), 255)) return fail(s);
        std::printf("%" PRId64 "\n", count);
        return 0;
    }

    return 1;
}
