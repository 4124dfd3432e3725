#ifndef VSR_IMAGE_HPP
#define VSR_IMAGE_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace vsr {

struct Offset {
    int dx;
    int dy;
};

// The fixed 8-neighbor stencil, (dx,dy) in pixel units, row above first,
// center (0,0) excluded. Every module shares this ordering; the weight-field
// dump format depends on it, so it must never be reordered.
inline constexpr std::array<Offset, 8> kNeighborOffsets{{
    {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}}};

// Grayscale raster, row-major doubles. Intensities are nominally in [0,1]
// (file IO maps [0,maxval] linearly at the boundary); intermediate results
// may leave that range and are clamped only where documented.
class Image {
public:
    Image() = default;
    Image(int width, int height, double fill = 0.0);
    Image(int width, int height, std::vector<double> data);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }

    double& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
    double at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }

    // Value at (x,y) with replicate (Neumann) boundary handling.
    double at_clamped(int x, int y) const;

    std::vector<double>& pixels() { return data_; }
    const std::vector<double>& pixels() const { return data_; }

    bool same_shape(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

inline int clamp_index(int v, int n) {
    if (v < 0) return 0;
    if (v >= n) return n - 1;
    return v;
}

// u at (x,y)+delta_i with replicate boundary; i in 0..7.
double neighbor_value(const Image& img, int x, int y, int i);

// Block-average decimation; width and height must be divisible by z.
Image downsample_block(const Image& img, int z);

}  // namespace vsr

#endif  // VSR_IMAGE_HPP
