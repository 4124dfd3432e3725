/*
 * C API for the variational super-resolution library.
 *
 * Objects are opaque handles created and destroyed by the library. Every
 * fallible call returns a vsr_status; on failure vsr_last_error() holds a
 * one-line description (thread-local, valid until the next failing call on
 * the same thread).
 */
#ifndef VSR_H
#define VSR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define VSR_API __declspec(dllexport)
#else
#define VSR_API __attribute__((visibility("default")))
#endif

typedef struct vsr_image vsr_image;
typedef struct vsr_weight_field vsr_weight_field;

typedef enum vsr_status {
    VSR_OK = 0,
    VSR_ERROR_INVALID_ARGUMENT = 1, /* bad parameter or precondition */
    VSR_ERROR_IO = 2,               /* file cannot be opened/written */
    VSR_ERROR_FORMAT = 3,           /* file exists but does not parse */
    VSR_ERROR_NUMERIC = 4,          /* iteration produced NaN/Inf */
    VSR_ERROR_INTERNAL = 5
} vsr_status;

VSR_API const char* vsr_last_error(void);

/* ---- images ---- */

/* data is row-major, length width*height; copied into the handle. */
VSR_API vsr_status vsr_image_create(int32_t width, int32_t height,
                                    const double* data, vsr_image** out);
VSR_API vsr_status vsr_image_load_pgm(const char* path, vsr_image** out);
/* maxval must be 255 or 65535; pixels are clamped to [0,1] and rounded. */
VSR_API vsr_status vsr_image_save_pgm(const vsr_image* img, const char* path,
                                      int32_t maxval);
VSR_API int32_t vsr_image_width(const vsr_image* img);
VSR_API int32_t vsr_image_height(const vsr_image* img);
/* Borrowed pointer, valid while the handle lives. */
VSR_API const double* vsr_image_data(const vsr_image* img);
VSR_API void vsr_image_free(vsr_image* img);

/* ---- configuration ---- */

typedef struct vsr_solver_config {
    double lambda;    /* fidelity weight, default 0.1 */
    double dt;        /* time step, default 2e-3 */
    double eps;       /* TV regularization floor, default 1e-2 */
    int32_t max_iters;/* default 500 */
    double stop_tol;  /* max-abs weight update threshold, default 1e-6 */
} vsr_solver_config;

typedef enum vsr_init_method {
    VSR_INIT_NEAREST = 0,
    VSR_INIT_BILINEAR = 1,
    VSR_INIT_BICUBIC = 2
} vsr_init_method;

typedef struct vsr_sr_config {
    int32_t zoom;               /* magnification, default 3 */
    vsr_solver_config solver;
    vsr_init_method init_method;/* default nearest */
    int32_t renormalize_weights;/* boolean, default 0 */
    double renorm_floor;        /* default 1e-6 */
} vsr_sr_config;

typedef struct vsr_tv_filter_config {
    double lambda_fit; /* anchor weight, default 1.0 */
    double eps;        /* gradient regularization, default 1e-4 */
    int32_t max_iters; /* default 200 */
    double stop_tol;   /* max-abs pixel update threshold, default 1e-6 */
} vsr_tv_filter_config;

#define VSR_DEFAULT_SOBEL_THRESHOLD 0.25

VSR_API void vsr_solver_config_init(vsr_solver_config* cfg);
VSR_API void vsr_sr_config_init(vsr_sr_config* cfg);
VSR_API void vsr_tv_filter_config_init(vsr_tv_filter_config* cfg);

/* ---- resampling and reconstruction ---- */

/* Block-average decimation; dimensions must be divisible by zoom. */
VSR_API vsr_status vsr_downsample_block(const vsr_image* img, int32_t zoom,
                                        vsr_image** out);
VSR_API vsr_status vsr_upscale_nearest(const vsr_image* img, int32_t zoom,
                                       vsr_image** out);
VSR_API vsr_status vsr_upscale_bilinear(const vsr_image* img, int32_t zoom,
                                        vsr_image** out);
VSR_API vsr_status vsr_upscale_bicubic(const vsr_image* img, int32_t zoom,
                                       vsr_image** out);
/* Nearest-neighbor upscale followed by the iterated digital TV filter.
   cfg may be NULL for defaults. */
VSR_API vsr_status vsr_tv_filter_upscale(const vsr_image* img, int32_t zoom,
                                         const vsr_tv_filter_config* cfg,
                                         vsr_image** out);

/* Full adaptive-filter pipeline. cfg may be NULL for defaults; iters_run and
   final_energy may be NULL. */
VSR_API vsr_status vsr_super_resolve(const vsr_image* lr, const vsr_sr_config* cfg,
                                     vsr_image** out, int32_t* iters_run,
                                     double* final_energy);

/* ---- weight fields ---- */

/* Gradient-flow weight estimation. cfg may be NULL for defaults. */
VSR_API vsr_status vsr_estimate_weights(const vsr_image* img,
                                        const vsr_solver_config* cfg,
                                        vsr_weight_field** out, int32_t* iters_run,
                                        double* final_energy);
VSR_API int32_t vsr_weight_field_width(const vsr_weight_field* w);
VSR_API int32_t vsr_weight_field_height(const vsr_weight_field* w);
/* 8, or 9 when an anchor plane is present. */
VSR_API int32_t vsr_weight_field_planes(const vsr_weight_field* w);
/* Borrowed row-major plane data; plane in [0, planes). Index 8 is the anchor
   when present. Returns NULL on a bad index. */
VSR_API const double* vsr_weight_field_plane(const vsr_weight_field* w,
                                             int32_t plane);
/* VWF1 dump format. */
VSR_API vsr_status vsr_weight_field_save(const vsr_weight_field* w,
                                         const char* path);
VSR_API vsr_status vsr_weight_field_load(const char* path,
                                         vsr_weight_field** out);
VSR_API void vsr_weight_field_free(vsr_weight_field* w);

/* ---- evaluation ---- */

VSR_API vsr_status vsr_mse(const vsr_image* a, const vsr_image* b, double* out);
/* PSNR in dB on the [0,1] scale; +infinity when the images are identical. */
VSR_API vsr_status vsr_psnr(const vsr_image* a, const vsr_image* b, double* out);
VSR_API vsr_status vsr_sobel_magnitude(const vsr_image* img, vsr_image** out);
VSR_API vsr_status vsr_edge_count(const vsr_image* magnitude, double threshold,
                                  int64_t* out);

/* Downsamples hr_ref by zoom, reconstructs with each method in the
 * comma-separated list (of: ours, bicubic, bilinear, nearest, tv), and scores
 * PSNR and Sobel edge count at the shared threshold.
 *   report_path  when non-NULL, the machine-readable records are written there
 *   table_out    when non-NULL, receives the human-readable table; release
 *                with vsr_string_free
 * sr_cfg and tv_cfg may be NULL for defaults. */
VSR_API vsr_status vsr_compare(const vsr_image* hr_ref, int32_t zoom,
                               const char* methods_csv, double sobel_threshold,
                               const vsr_sr_config* sr_cfg,
                               const vsr_tv_filter_config* tv_cfg,
                               const char* reference_name,
                               const char* report_path, char** table_out);
VSR_API void vsr_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* VSR_H */
