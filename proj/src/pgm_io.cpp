#include "vsr/pgm_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <vector>

#include "vsr/errors.hpp"

namespace vsr {

namespace {

// Skips whitespace and '#' comment lines between header tokens.
void skip_separators(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

long read_header_int(std::istream& in, const std::string& path, const char* what) {
    skip_separators(in);
    long v = 0;
    bool any = false;
    int c = in.peek();
    while (c != EOF && std::isdigit(c)) {
        v = v * 10 + (in.get() - '0');
        any = true;
        if (v > 1000000000) break;
        c = in.peek();
    }
    if (!any)
        throw FormatError(path + ": malformed PGM header (bad " + std::string(what) + ")");
    return v;
}

}  // namespace

Image load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open file");

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P')
        throw FormatError(path + ": not a PGM file (missing magic number)");
    if (m1 != '2' && m1 != '5')
        throw FormatError(path + ": unsupported format P" + std::string(1, m1) +
                          " (only P2 and P5 are supported)");
    const bool binary = (m1 == '5');

    const long width = read_header_int(in, path, "width");
    const long height = read_header_int(in, path, "height");
    const long maxval = read_header_int(in, path, "maxval");
    if (width < 1 || height < 1)
        throw FormatError(path + ": malformed PGM header (non-positive dimensions)");
    if (maxval < 1 || maxval > 65535)
        throw FormatError(path + ": malformed PGM header (maxval out of range)");

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<double> data(count);
    const double scale = 1.0 / static_cast<double>(maxval);

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        int sep = in.get();
        if (sep == EOF || !std::isspace(sep))
            throw FormatError(path + ": malformed PGM header (missing raster separator)");
        const int bytes_per_sample = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> raw(count * bytes_per_sample);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size())
            throw FormatError(path + ": truncated pixel data");
        if (bytes_per_sample == 1) {
            for (std::size_t i = 0; i < count; ++i) data[i] = raw[i] * scale;
        } else {
            for (std::size_t i = 0; i < count; ++i) {
                const unsigned v = (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1];
                data[i] = v * scale;
            }
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            skip_separators(in);
            if (in.peek() == EOF) throw FormatError(path + ": truncated pixel data");
            long v = read_header_int(in, path, "sample");
            if (v > maxval)
                throw FormatError(path + ": sample value exceeds maxval");
            data[i] = v * scale;
        }
    }
    return Image(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

void save_pgm(const Image& img, const std::string& path, int maxval) {
    if (maxval != 255 && maxval != 65535)
        throw std::invalid_argument("PGM maxval must be 255 or 65535");

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path + ": cannot open file for writing");

    out << "P5\n" << img.width() << " " << img.height() << "\n" << maxval << "\n";
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double v = img.at(x, y);
            if (v < 0.0) v = 0.0;
            if (v > 1.0) v = 1.0;
            const long q = std::lround(v * maxval);  // half away from zero
            if (maxval > 255) {
                const unsigned char hi = static_cast<unsigned char>((q >> 8) & 0xff);
                const unsigned char lo = static_cast<unsigned char>(q & 0xff);
                out.put(static_cast<char>(hi));
                out.put(static_cast<char>(lo));
            } else {
                out.put(static_cast<char>(static_cast<unsigned char>(q)));
            }
        }
    }
    if (!out) throw IoError(path + ": write failed");
}

}  // namespace vsr
