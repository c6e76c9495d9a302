#include "dashgrid/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dashgrid/error.hpp"

namespace dashgrid {

namespace {

void check_dimensions(int width, int height) {
    if (width < 1 || height < 1) {
        throw ArgumentError("image dimensions must be positive, got " +
                            std::to_string(width) + "x" + std::to_string(height));
    }
}

std::size_t area(int width, int height) {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

// floor(a / 2) for possibly negative a.
int floor_half(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

BinaryMask rotate_quarter_turns(const BinaryMask& mask, int turns) {
    const int w = mask.width();
    const int h = mask.height();
    // cos/sin of the rotation angle, which are exact for quarter turns.
    static constexpr int kCos[4] = {1, 0, -1, 0};
    static constexpr int kSin[4] = {0, 1, 0, -1};
    const int c = kCos[turns];
    const int s = kSin[turns];

    BinaryMask out(w, h);
    // Work in doubled coordinates so the center (w-1)/2, (h-1)/2 is integral.
    for (int y = 0; y < h; ++y) {
        const int dy2 = 2 * y - (h - 1);
        for (int x = 0; x < w; ++x) {
            const int dx2 = 2 * x - (w - 1);
            const int sx2 = dx2 * c - dy2 * s + (w - 1);
            const int sy2 = dx2 * s + dy2 * c + (h - 1);
            // Half-integer sources only occur when w and h differ in parity;
            // those round half up like the general path.
            const int sx = floor_half(sx2 + 1);
            const int sy = floor_half(sy2 + 1);
            if (mask.contains(sx, sy) && mask.at(sx, sy)) out.set(x, y, true);
        }
    }
    return out;
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
    check_dimensions(width, height);
    data_.assign(area(width, height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dimensions(width, height);
    if (data_.size() != area(width, height)) {
        throw ArgumentError("pixel buffer holds " + std::to_string(data_.size()) +
                            " values, expected " +
                            std::to_string(area(width, height)));
    }
}

BinaryMask::BinaryMask(int width, int height, bool fill) : width_(width), height_(height) {
    check_dimensions(width, height);
    data_.assign(area(width, height), fill ? 1 : 0);
}

std::size_t BinaryMask::count() const {
    return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

BinaryMask binarize(const GrayImage& img, int threshold) {
    BinaryMask out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (img.at(x, y) >= threshold) out.set(x, y, true);
        }
    }
    return out;
}

BinaryMask rotate(const BinaryMask& mask, double degrees) {
    if (!std::isfinite(degrees)) {
        throw ArgumentError("rotation angle must be finite");
    }
    double wrapped = std::fmod(degrees, 360.0);
    if (wrapped < 0) wrapped += 360.0;
    const double quarters = wrapped / 90.0;
    if (quarters == std::floor(quarters)) {
        const int turns = static_cast<int>(quarters) % 4;
        if (turns == 0) return mask;
        return rotate_quarter_turns(mask, turns);
    }

    const double rad = wrapped * std::acos(-1.0) / 180.0;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    const double cx = (mask.width() - 1) / 2.0;
    const double cy = (mask.height() - 1) / 2.0;

    BinaryMask out(mask.width(), mask.height());
    for (int y = 0; y < mask.height(); ++y) {
        const double dy = y - cy;
        for (int x = 0; x < mask.width(); ++x) {
            const double dx = x - cx;
            // Inverse of the y-down counterclockwise rotation.
            const double sx = cx + dx * c - dy * s;
            const double sy = cy + dx * s + dy * c;
            const int ix = static_cast<int>(std::floor(sx + 0.5));
            const int iy = static_cast<int>(std::floor(sy + 0.5));
            if (mask.contains(ix, iy) && mask.at(ix, iy)) out.set(x, y, true);
        }
    }
    return out;
}

void check_region(const RectRegion& region, int width, int height) {
    const bool ok = region.width >= 1 && region.height >= 1 && region.x0 >= 0 &&
                    region.y0 >= 0 && region.x0 <= width - region.width &&
                    region.y0 <= height - region.height;
    if (!ok) {
        throw ArgumentError("crop region (" + std::to_string(region.x0) + ", " +
                            std::to_string(region.y0) + ", " +
                            std::to_string(region.width) + "x" +
                            std::to_string(region.height) + ") is outside the " +
                            std::to_string(width) + "x" + std::to_string(height) +
                            " image");
    }
}

BinaryMask crop(const BinaryMask& mask, const RectRegion& region) {
    check_region(region, mask.width(), mask.height());
    BinaryMask out(region.width, region.height);
    for (int y = 0; y < region.height; ++y) {
        for (int x = 0; x < region.width; ++x) {
            if (mask.at(region.x0 + x, region.y0 + y)) out.set(x, y, true);
        }
    }
    return out;
}

}  // namespace dashgrid
