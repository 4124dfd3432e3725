#include "vsr/image.hpp"

#include <stdexcept>
#include <string>

namespace vsr {

Image::Image(int width, int height, double fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("image dimensions must be at least 1x1");
    data_.assign(static_cast<std::size_t>(width) * height, fill);
}

Image::Image(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("image dimensions must be at least 1x1");
    if (data_.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("pixel data length does not match dimensions");
}

double Image::at_clamped(int x, int y) const {
    return at(clamp_index(x, width_), clamp_index(y, height_));
}

double neighbor_value(const Image& img, int x, int y, int i) {
    const Offset& d = kNeighborOffsets[i];
    return img.at_clamped(x + d.dx, y + d.dy);
}

Image downsample_block(const Image& img, int z) {
    if (z < 2) throw std::invalid_argument("downsample factor must be >= 2");
    if (img.width() % z != 0 || img.height() % z != 0)
        throw std::invalid_argument("image dimensions " + std::to_string(img.width()) +
                                    "x" + std::to_string(img.height()) +
                                    " are not divisible by zoom " + std::to_string(z));

    Image out(img.width() / z, img.height() / z);
    const double inv = 1.0 / (static_cast<double>(z) * z);
    for (int oy = 0; oy < out.height(); ++oy) {
        for (int ox = 0; ox < out.width(); ++ox) {
            // Accumulate deviations from the block's first pixel so that a
            // constant block averages to exactly that constant.
            const double base = img.at(ox * z, oy * z);
            double acc = 0.0;
            for (int by = 0; by < z; ++by)
                for (int bx = 0; bx < z; ++bx)
                    acc += img.at(ox * z + bx, oy * z + by) - base;
            out.at(ox, oy) = base + acc * inv;
        }
    }
    return out;
}

}  // namespace vsr
