#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dashgrid {

/// 8-bit luminance raster, row-major, origin at the top-left.
class GrayImage {
public:
    GrayImage(int width, int height, std::uint8_t fill = 0);
    GrayImage(int width, int height, std::vector<std::uint8_t> data);

    int width() const { return width_; }
    int height() const { return height_; }
    std::uint8_t at(int x, int y) const { return data_[index(x, y)]; }
    void set(int x, int y, std::uint8_t v) { data_[index(x, y)] = v; }
    std::span<const std::uint8_t> pixels() const { return data_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> data_;
};

/// Two-level raster; true marks a dash-line (foreground) pixel.
/// Stored one byte per pixel so rows can be handed out as spans.
class BinaryMask {
public:
    BinaryMask(int width, int height, bool fill = false);

    int width() const { return width_; }
    int height() const { return height_; }

    bool at(int x, int y) const { return data_[index(x, y)] != 0; }
    void set(int x, int y, bool v) { data_[index(x, y)] = v ? 1 : 0; }
    bool contains(int x, int y) const {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    /// Row `y` as 0/1 bytes.
    std::span<const std::uint8_t> row(int y) const {
        return std::span<const std::uint8_t>(data_).subspan(
            index(0, y), static_cast<std::size_t>(width_));
    }

    std::size_t count() const;

    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> data_;
};

/// Axis-aligned rectangle in pixel coordinates.
struct RectRegion {
    int x0 = 0;
    int y0 = 0;
    int width = 0;
    int height = 0;

    friend bool operator==(const RectRegion&, const RectRegion&) = default;
};

/// Foreground iff luminance >= threshold, so threshold 0 selects everything.
BinaryMask binarize(const GrayImage& img, int threshold);

/// Rotates counterclockwise by `degrees` about the image center. The output
/// keeps the input size; pixels are sampled by nearest-neighbour inverse
/// mapping and anything that maps outside the source becomes background.
/// Multiples of 90 degrees take an exact integer path.
BinaryMask rotate(const BinaryMask& mask, double degrees);

BinaryMask crop(const BinaryMask& mask, const RectRegion& region);

/// Throws ArgumentError unless `region` is non-empty and inside a
/// width x height image.
void check_region(const RectRegion& region, int width, int height);

}  // namespace dashgrid
