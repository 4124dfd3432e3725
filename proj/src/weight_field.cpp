#include "vsr/weight_field.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "vsr/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "VWF1 IO assumes a little-endian host");
static_assert(sizeof(double) == 8);

namespace vsr {

WeightField::WeightField(int width, int height, bool with_anchor)
    : width_(width), height_(height), has_anchor_(with_anchor) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("weight field dimensions must be at least 1x1");
    planes_.assign(with_anchor ? 9 : 8,
                   std::vector<double>(static_cast<std::size_t>(width) * height, 0.0));
}

WeightField WeightField::uniform(int width, int height) {
    WeightField w(width, height);
    for (int i = 0; i < 8; ++i)
        w.planes_[i].assign(w.planes_[i].size(), 0.125);
    return w;
}

double weight_sum(const WeightField& w, std::size_t idx) {
    // Offsets 1<->3, 2<->5 and 4<->6 swap under transposition; 0 and 7 are
    // fixed. Summing those pairs first makes the result independent of the
    // image orientation.
    const double p1 = w.plane(0)[idx] + w.plane(7)[idx];
    const double p2 = w.plane(2)[idx] + w.plane(5)[idx];
    const double p3 = w.plane(1)[idx] + w.plane(6)[idx];
    const double p4 = w.plane(3)[idx] + w.plane(4)[idx];
    return (p1 + p2) + (p3 + p4);
}

WeightField renormalize(const WeightField& w, double floor) {
    if (!(floor > 0.0)) throw std::invalid_argument("renormalize floor must be positive");
    WeightField out = w;
    const std::size_t n = static_cast<std::size_t>(w.width()) * w.height();
    for (std::size_t idx = 0; idx < n; ++idx) {
        const double sum = weight_sum(w, idx);
        if (std::fabs(sum) >= floor) {
            for (int i = 0; i < 8; ++i) out.plane(i)[idx] = w.plane(i)[idx] / sum;
        } else {
            for (int i = 0; i < 8; ++i) out.plane(i)[idx] = 0.125;
        }
    }
    return out;
}

void save_vwf(const WeightField& w, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path + ": cannot open file for writing");
    out << "VWF1\n" << w.width() << " " << w.height() << " " << w.plane_count() << "\n";
    for (int i = 0; i < w.plane_count(); ++i) {
        const std::vector<double>& p = w.plane(i);
        out.write(reinterpret_cast<const char*>(p.data()),
                  static_cast<std::streamsize>(p.size() * sizeof(double)));
    }
    if (!out) throw IoError(path + ": write failed");
}

WeightField load_vwf(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open file");

    char magic[5] = {};
    in.read(magic, 5);
    if (!in || std::string(magic, 5) != "VWF1\n")
        throw FormatError(path + ": not a VWF1 weight dump");

    std::int64_t width = 0, height = 0, planes = 0;
    in >> width >> height >> planes;
    if (!in || width < 1 || height < 1 || (planes != 8 && planes != 9))
        throw FormatError(path + ": malformed VWF1 header");
    if (in.get() != '\n')
        throw FormatError(path + ": malformed VWF1 header");

    WeightField w(static_cast<int>(width), static_cast<int>(height), planes == 9);
    for (int i = 0; i < w.plane_count(); ++i) {
        std::vector<double>& p = w.plane(i);
        in.read(reinterpret_cast<char*>(p.data()),
                static_cast<std::streamsize>(p.size() * sizeof(double)));
        if (static_cast<std::size_t>(in.gcount()) != p.size() * sizeof(double))
            throw FormatError(path + ": truncated VWF1 plane data");
    }
    return w;
}

}  // namespace vsr
