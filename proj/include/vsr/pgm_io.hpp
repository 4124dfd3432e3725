#ifndef VSR_PGM_IO_HPP
#define VSR_PGM_IO_HPP

#include <string>

#include "vsr/image.hpp"

namespace vsr {

// Reads a P2 (ASCII) or P5 (binary) PGM, maxval <= 65535. Samples are mapped
// linearly to [0,1] as value/maxval. 16-bit P5 samples are big-endian.
// Throws IoError if the file cannot be opened, FormatError otherwise.
Image load_pgm(const std::string& path);

// Writes a P5 binary PGM. maxval must be 255 or 65535; each pixel is
// round(clamp(v,0,1) * maxval), half away from zero. 16-bit samples are
// written big-endian.
void save_pgm(const Image& img, const std::string& path, int maxval = 255);

}  // namespace vsr

#endif  // VSR_PGM_IO_HPP
