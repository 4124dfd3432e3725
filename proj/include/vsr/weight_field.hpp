#ifndef VSR_WEIGHT_FIELD_HPP
#define VSR_WEIGHT_FIELD_HPP

#include <string>
#include <vector>

namespace vsr {

// Eight per-pixel weight planes, plane i aligned to kNeighborOffsets[i].
// The digital TV filter additionally carries an anchor plane (stored last)
// holding the coefficient of the original image.
class WeightField {
public:
    WeightField() = default;
    WeightField(int width, int height, bool with_anchor = false);

    // All eight planes uniformly 1/8, the symmetric partition of unity.
    static WeightField uniform(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    bool has_anchor() const { return has_anchor_; }
    int plane_count() const { return has_anchor_ ? 9 : 8; }

    std::vector<double>& plane(int i) { return planes_[i]; }
    const std::vector<double>& plane(int i) const { return planes_[i]; }
    std::vector<double>& anchor() { return planes_[8]; }
    const std::vector<double>& anchor() const { return planes_[8]; }

private:
    int width_ = 0;
    int height_ = 0;
    bool has_anchor_ = false;
    std::vector<std::vector<double>> planes_;
};

// Per-pixel sum of the eight weights, accumulated in an order that is
// invariant under image transposition (pairs of offsets that map onto each
// other under (dx,dy) -> (dy,dx) are added first).
double weight_sum(const WeightField& w, std::size_t idx);

// Rescales each pixel's eight weights to sum to 1 when |sum| >= floor,
// otherwise resets that pixel to uniform 1/8. Negative weights are kept.
WeightField renormalize(const WeightField& w, double floor);

// VWF1 dump: "VWF1\n", ASCII "width height planes\n", then each plane
// row-major as little-endian IEEE-754 doubles, anchor last when present.
void save_vwf(const WeightField& w, const std::string& path);
WeightField load_vwf(const std::string& path);

}  // namespace vsr

#endif  // VSR_WEIGHT_FIELD_HPP
