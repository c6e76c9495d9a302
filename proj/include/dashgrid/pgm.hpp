#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dashgrid/raster.hpp"

namespace dashgrid {

/// Decodes a P2 (ASCII) or P5 (binary) PGM stream with maxval <= 255.
/// Sample values are returned as stored, without rescaling to 255.
/// Throws FormatError naming the byte offset of the first problem.
GrayImage load_pgm(std::string_view bytes);

/// P5, maxval 255, foreground 255, background 0.
std::string save_pgm(const BinaryMask& mask);
std::string save_pgm(const GrayImage& img);

// File helpers; IoError on filesystem failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

GrayImage read_pgm_file(const std::filesystem::path& path);

/// Loads a PGM and binarizes it at `threshold`.
BinaryMask read_mask_file(const std::filesystem::path& path, int threshold = 128);

}  // namespace dashgrid
