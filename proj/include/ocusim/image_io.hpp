#pragma once

#include <string>

#include "ocusim/image.hpp"

namespace ocusim {

// 8-bit PNG and binary PGM. Scalars map to bytes by round(v*255) on write and
// byte/255 on read.
Image read_png(const std::string& path);
void write_png(const Image& img, const std::string& path);

Image read_pgm(const std::string& path);
void write_pgm(const Image& img, const std::string& path);  // grayscale only

Image read_image(const std::string& path);   // dispatch on extension
void write_image(const Image& img, const std::string& path);

}  // namespace ocusim
