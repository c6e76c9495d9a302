#include "dashgrid/pgm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <vector>

#include "dashgrid/error.hpp"

namespace dashgrid {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PgmReader {
public:
    explicit PgmReader(std::string_view bytes) : bytes_(bytes) {}

    [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
        throw FormatError("pgm: " + what + " at byte offset " + std::to_string(offset));
    }

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }
    void advance(std::size_t n) { pos_ += n; }

    // Skips whitespace and '#' comments.
    void skip_separators() {
        while (!at_end()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (is_space(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int read_number(const std::string& what) {
        skip_separators();
        const std::size_t start = pos_;
        if (at_end()) fail("truncated data, expected " + what, start);
        long long value = 0;
        while (!at_end() && is_digit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) fail(what + " is too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected " + what, start);
        if (!at_end() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
            fail("unexpected character in " + what, pos_);
        }
        return static_cast<int>(value);
    }

    std::string_view remaining() const { return bytes_.substr(pos_); }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage load_pgm(std::string_view bytes) {
    PgmReader in(bytes);
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        in.fail("bad magic, expected P2 or P5", 0);
    }
    const bool ascii = bytes[1] == '2';
    in.advance(2);
    if (!in.at_end() && !is_space(bytes[2]) && bytes[2] != '#') {
        in.fail("bad magic, expected P2 or P5", 0);
    }

    in.skip_separators();
    const std::size_t width_at = in.pos();
    const int width = in.read_number("width");
    const int height = in.read_number("height");
    if (width < 1 || height < 1) in.fail("image dimensions must be positive", width_at);
    in.skip_separators();
    const std::size_t maxval_at = in.pos();
    const int maxval = in.read_number("maxval");
    if (maxval < 1 || maxval > 255) {
        in.fail("maxval " + std::to_string(maxval) + " outside 1..255", maxval_at);
    }

    const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> data;
    data.reserve(n);

    if (ascii) {
        for (std::size_t i = 0; i < n; ++i) {
            in.skip_separators();
            const std::size_t at = in.pos();
            if (in.at_end()) {
                in.fail("truncated data, got " + std::to_string(i) + " of " +
                            std::to_string(n) + " samples",
                        at);
            }
            const int v = in.read_number("sample");
            if (v > maxval) in.fail("sample exceeds maxval", at);
            data.push_back(static_cast<std::uint8_t>(v));
        }
    } else {
        // Exactly one whitespace byte separates the header from the raster.
        if (in.at_end() || !is_space(in.remaining().front())) {
            in.fail("expected whitespace after maxval", in.pos());
        }
        in.advance(1);
        const std::string_view raster = in.remaining();
        if (raster.size() < n) {
            in.fail("truncated data, got " + std::to_string(raster.size()) + " of " +
                        std::to_string(n) + " bytes",
                    in.pos() + raster.size());
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = static_cast<std::uint8_t>(raster[i]);
            if (v > maxval) in.fail("sample exceeds maxval", in.pos() + i);
            data.push_back(v);
        }
    }
    return GrayImage(width, height, std::move(data));
}

namespace {

std::string p5_header(int width, int height) {
    return "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
}

}  // namespace

std::string save_pgm(const BinaryMask& mask) {
    std::string out = p5_header(mask.width(), mask.height());
    out.reserve(out.size() + static_cast<std::size_t>(mask.width()) * mask.height());
    for (int y = 0; y < mask.height(); ++y) {
        for (const std::uint8_t v : mask.row(y)) out.push_back(v ? '\xff' : '\0');
    }
    return out;
}

std::string save_pgm(const GrayImage& img) {
    std::string out = p5_header(img.width(), img.height());
    for (const std::uint8_t v : img.pixels()) out.push_back(static_cast<char>(v));
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
    try {
        return load_pgm(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

BinaryMask read_mask_file(const std::filesystem::path& path, int threshold) {
    return binarize(read_pgm_file(path), threshold);
}

}  // namespace dashgrid
