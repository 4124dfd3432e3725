#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>

#include "vsr/baselines.hpp"
#include "vsr/image.hpp"

#include "oracles.hpp"

namespace {

double source_coord(int X, int z, int n) {
    double s = (X + 0.5) / z - 0.5;
    return std::clamp(s, 0.0, double(n - 1));
}

// Textbook bilinear blend, written independently of the implementation.
double bilinear_ref(const vsr::Image& img, int X, int Y, int z) {
    const double sx = source_coord(X, z, img.width());
    const double sy = source_coord(Y, z, img.height());
    const int x0 = int(sx), y0 = int(sy);
    const int x1 = std::min(x0 + 1, img.width() - 1);
    const int y1 = std::min(y0 + 1, img.height() - 1);
    const double fx = sx - x0, fy = sy - y0;
    return (1 - fy) * ((1 - fx) * img.at(x0, y0) + fx * img.at(x1, y0)) +
           fy * ((1 - fx) * img.at(x0, y1) + fx * img.at(x1, y1));
}

// Direct 4x4 tap sum for cubic convolution with clamped taps.
double bicubic_ref(const vsr::Image& img, int X, int Y, int z) {
    const double sx = source_coord(X, z, img.width());
    const double sy = source_coord(Y, z, img.height());
    const int x0 = int(sx), y0 = int(sy);
    const double fx = sx - x0, fy = sy - y0;
    double acc = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            const int xs = oracle::clampi(x0 - 1 + i, 0, img.width() - 1);
            const int ys = oracle::clampi(y0 - 1 + j, 0, img.height() - 1);
            acc += oracle::cubic_kernel(fx - (i - 1)) * oracle::cubic_kernel(fy - (j - 1)) *
                   img.at(xs, ys);
        }
    return acc;
}

vsr::Image dyadic_affine(int w, int h) {
    vsr::Image img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.at(x, y) = 0.25 + 0.03125 * x + 0.015625 * y;
    return img;
}

}  // namespace

TEST_CASE("upscale_nearest replicates blocks") {
    vsr::Image img(2, 2, {0.1, 0.2, 0.3, 0.4});
    vsr::Image out = vsr::upscale_nearest(img, 3);
    REQUIRE(out.width() == 6);
    REQUIRE(out.height() == 6);
    for (int Y = 0; Y < 6; ++Y)
        for (int X = 0; X < 6; ++X) CHECK(out.at(X, Y) == img.at(X / 3, Y / 3));
}

TEST_CASE("upscalers reject zoom below 2") {
    vsr::Image img(2, 2, 0.5);
    CHECK_THROWS_AS(vsr::upscale_nearest(img, 1), std::invalid_argument);
    CHECK_THROWS_AS(vsr::upscale_bilinear(img, 0), std::invalid_argument);
    CHECK_THROWS_AS(vsr::upscale_bicubic(img, -2), std::invalid_argument);
}

TEST_CASE("upscale_bilinear on a two-pixel ramp gives the derived values") {
    // z = 2 on {0,1}: source coords -0.25(clamped 0), 0.25, 0.75, 1.25(clamped 1)
    vsr::Image img(2, 1, {0.0, 1.0});
    vsr::Image out = vsr::upscale_bilinear(img, 2);
    REQUIRE(out.width() == 4);
    CHECK(out.at(0, 0) == 0.0);
    CHECK(out.at(1, 0) == 0.25);
    CHECK(out.at(2, 0) == 0.75);
    CHECK(out.at(3, 0) == 1.0);
}

TEST_CASE("upscale_bilinear and upscale_bicubic keep constants bit-exact") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = dist(rng);
        vsr::Image img(3, 4, c);
        const vsr::Image lin = vsr::upscale_bilinear(img, 3);
        const vsr::Image cub = vsr::upscale_bicubic(img, 3);
        const vsr::Image nn = vsr::upscale_nearest(img, 3);
        for (double v : lin.pixels()) CHECK(v == c);
        for (double v : cub.pixels()) CHECK(v == c);
        for (double v : nn.pixels()) CHECK(v == c);
    }
}

TEST_CASE("upscale_bilinear matches the direct blend on random images") {
    std::mt19937 rng(103);
    for (int z : {2, 3, 4}) {
        vsr::Image img = oracle::random_image(rng, 5, 7);
        vsr::Image out = vsr::upscale_bilinear(img, z);
        for (int Y = 0; Y < out.height(); ++Y)
            for (int X = 0; X < out.width(); ++X)
                CHECK(out.at(X, Y) ==
                      doctest::Approx(bilinear_ref(img, X, Y, z)).epsilon(1e-12));
    }
}

TEST_CASE("upscale_bilinear reproduces affine images away from the clamped rim") {
    // dyadic slopes and z = 2 make every intermediate value exact in binary
    vsr::Image img = dyadic_affine(8, 8);
    vsr::Image out = vsr::upscale_bilinear(img, 2);
    for (int Y = 1; Y < 15; ++Y)
        for (int X = 1; X < 15; ++X) {
            const double sx = X / 2.0 - 0.25, sy = Y / 2.0 - 0.25;
            CHECK(out.at(X, Y) == 0.25 + 0.03125 * sx + 0.015625 * sy);
        }
}

TEST_CASE("catmull_rom pinned values and unit tap sum") {
    CHECK(vsr::catmull_rom(0.0) == 1.0);
    CHECK(vsr::catmull_rom(1.0) == 0.0);
    CHECK(vsr::catmull_rom(2.0) == 0.0);
    CHECK(vsr::catmull_rom(0.5) == 0.5625);
    CHECK(vsr::catmull_rom(-0.5) == 0.5625);
    CHECK(vsr::catmull_rom(1.5) == -0.0625);

    // fractional offset 0.25: the four taps are at distances 1.25, 0.25, 0.75, 1.75
    CHECK(vsr::catmull_rom(0.25) == 0.8671875);
    CHECK(vsr::catmull_rom(0.75) == 0.2265625);
    CHECK(vsr::catmull_rom(1.25) == -0.0703125);
    CHECK(vsr::catmull_rom(1.75) == -0.0234375);
    CHECK(0.8671875 + 0.2265625 - 0.0703125 - 0.0234375 == 1.0);

    // the kernel matches its piecewise definition everywhere
    for (double t = -2.5; t <= 2.5; t += 0.0625)
        CHECK(vsr::catmull_rom(t) == doctest::Approx(oracle::cubic_kernel(t)).epsilon(1e-15));
}

TEST_CASE("upscale_bicubic matches the direct 4x4 tap sum") {
    std::mt19937 rng(107);
    for (int z : {2, 3}) {
        vsr::Image img = oracle::random_image(rng, 6, 5);
        vsr::Image out = vsr::upscale_bicubic(img, z);
        for (int Y = 0; Y < out.height(); ++Y)
            for (int X = 0; X < out.width(); ++X)
                CHECK(std::fabs(out.at(X, Y) - bicubic_ref(img, X, Y, z)) < 1e-12);
    }
}

TEST_CASE("upscale_bicubic reproduces affine images in the deep interior") {
    vsr::Image img = dyadic_affine(10, 10);
    vsr::Image out = vsr::upscale_bicubic(img, 3);
    for (int Y = 9; Y < 21; ++Y)
        for (int X = 9; X < 21; ++X) {
            const double sx = (X + 0.5) / 3.0 - 0.5, sy = (Y + 0.5) / 3.0 - 0.5;
            CHECK(out.at(X, Y) ==
                  doctest::Approx(0.25 + 0.03125 * sx + 0.015625 * sy).epsilon(1e-13));
        }
}

TEST_CASE("upscale_bicubic overshoots a step edge; bilinear does not") {
    vsr::Image img(6, 1, {0.0, 0.0, 0.0, 1.0, 1.0, 1.0});
    vsr::Image cubic = vsr::upscale_bicubic(img, 3);
    double lo = 0.0, hi = 1.0;
    for (double v : cubic.pixels()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(lo < 0.0);
    CHECK(hi > 1.0);

    vsr::Image linear = vsr::upscale_bilinear(img, 3);
    for (double v : linear.pixels()) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("tv_filter_coeffs form a partition of unity and match the oracle") {
    std::mt19937 rng(109);
    vsr::TvFilterConfig cfg;
    vsr::Image img = oracle::random_image(rng, 7, 6);
    vsr::WeightField c = vsr::tv_filter_coeffs(img, cfg);
    REQUIRE(c.has_anchor());

    oracle::TvCoeffs ref = oracle::tv_filter_coeffs(img, cfg.lambda_fit, cfg.eps);
    for (std::size_t idx = 0; idx < img.size(); ++idx) {
        double sum = c.anchor()[idx];
        CHECK(c.anchor()[idx] > 0.0);
        for (int i = 0; i < 8; ++i) {
            CHECK(c.plane(i)[idx] > 0.0);
            CHECK(c.plane(i)[idx] == doctest::Approx(ref.h[i][idx]).epsilon(1e-12));
            sum += c.plane(i)[idx];
        }
        CHECK(c.anchor()[idx] == doctest::Approx(ref.h0[idx]).epsilon(1e-12));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("tv_filter_coeffs on a flat image are isotropic") {
    vsr::Image img(5, 5, 0.6);
    vsr::TvFilterConfig cfg;
    vsr::WeightField c = vsr::tv_filter_coeffs(img, cfg);
    // every affinity is 2/eps, so all eight coefficients agree everywhere
    const double expect = (2.0 / cfg.eps) / (cfg.lambda_fit + 16.0 / cfg.eps);
    for (int i = 0; i < 8; ++i)
        for (double v : c.plane(i)) CHECK(v == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("tv_filter_coeffs reject a non-positive eps") {
    vsr::Image img(3, 3, 0.5);
    vsr::TvFilterConfig cfg;
    cfg.eps = 0.0;
    CHECK_THROWS_AS(vsr::tv_filter_coeffs(img, cfg), std::invalid_argument);
}

TEST_CASE("tv_filter_step keeps constants bitwise fixed") {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double cval = dist(rng);
        vsr::Image img(4, 5, cval);
        auto [next, max_update] = vsr::tv_filter_step(img, img, vsr::TvFilterConfig{});
        CHECK(max_update == 0.0);
        for (double v : next.pixels()) CHECK(v == cval);
    }
}

TEST_CASE("tv_filter_step rejects mismatched shapes") {
    vsr::Image a(3, 3, 0.5), b(2, 2, 0.5);
    CHECK_THROWS_AS(vsr::tv_filter_step(a, b, vsr::TvFilterConfig{}), std::invalid_argument);
}

TEST_CASE("tv_filter with a huge fitting weight returns nearly the input") {
    std::mt19937 rng(127);
    vsr::Image img = oracle::random_image(rng, 8, 8);
    vsr::TvFilterConfig cfg;
    cfg.lambda_fit = 1e12;
    vsr::Image out = vsr::tv_filter(img, cfg);
    for (std::size_t i = 0; i < img.size(); ++i)
        CHECK(std::fabs(out.pixels()[i] - img.pixels()[i]) < 1e-6);
}

TEST_CASE("tv_filter output stays within the input range and damps an impulse") {
    vsr::Image img(9, 9, 0.2);
    img.at(4, 4) = 1.0;
    vsr::Image out = vsr::tv_filter(img, vsr::TvFilterConfig{});
    for (double v : out.pixels()) {
        CHECK(v >= 0.2);
        CHECK(v <= 1.0);
    }
    CHECK(out.at(4, 4) < 1.0);

    // one explicit step already pulls the spike toward its neighbors
    auto [one, upd] = vsr::tv_filter_step(img, img, vsr::TvFilterConfig{});
    CHECK(one.at(4, 4) < img.at(4, 4));
    CHECK(upd > 0.0);
}

TEST_CASE("tv_filter is deterministic across runs") {
    std::mt19937 rng(131);
    vsr::Image img = oracle::random_image(rng, 10, 6);
    vsr::Image a = vsr::tv_filter(img, vsr::TvFilterConfig{});
    vsr::Image b = vsr::tv_filter(img, vsr::TvFilterConfig{});
    CHECK(std::memcmp(a.pixels().data(), b.pixels().data(),
                      a.size() * sizeof(double)) == 0);
}

TEST_CASE("tv_filter_upscale composes nearest upscale with the filter") {
    std::mt19937 rng(137);
    vsr::Image img = oracle::random_image(rng, 4, 3);
    vsr::TvFilterConfig cfg;
    cfg.max_iters = 15;
    vsr::Image got = vsr::tv_filter_upscale(img, 3, cfg);
    REQUIRE(got.width() == 12);
    REQUIRE(got.height() == 9);
    vsr::Image want = vsr::tv_filter(vsr::upscale_nearest(img, 3), cfg);
    CHECK(std::memcmp(got.pixels().data(), want.pixels().data(),
                      got.size() * sizeof(double)) == 0);
}
