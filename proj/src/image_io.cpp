#include "tan/image_io.hpp"

#include "tan/error.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

namespace tan {

namespace {

std::uint8_t quantize(float v) {
    float q = std::round(255.f * std::clamp(v, 0.f, 1.f));
    return std::uint8_t(q);
}

struct GrayImage {
    int width = 0, height = 0;
    std::vector<std::uint8_t> bytes;
};

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("io_error", "cannot open image: " + path.string());

    auto next_token = [&]() -> std::string {
        std::string tok;
        int ch;
        while ((ch = in.get()) != EOF) {
            if (ch == '#') {
                while ((ch = in.get()) != EOF && ch != '\n') {}
                continue;
            }
            if (std::isspace(ch)) {
                if (!tok.empty()) break;
                continue;
            }
            tok.push_back(char(ch));
        }
        return tok;
    };

    if (next_token() != "P5") fail("format_error", "not a binary PGM (P5): " + path.string());
    GrayImage img;
    try {
        img.width = std::stoi(next_token());
        img.height = std::stoi(next_token());
        int maxval = std::stoi(next_token());
        if (maxval != 255) fail("format_error", "PGM maxval must be 255: " + path.string());
    } catch (const std::exception&) {
        fail("format_error", "malformed PGM header: " + path.string());
    }
    if (img.width <= 0 || img.height <= 0)
        fail("format_error", "non-positive PGM dimensions: " + path.string());

    img.bytes.resize(size_t(img.width) * img.height);
    in.read(reinterpret_cast<char*>(img.bytes.data()), std::streamsize(img.bytes.size()));
    if (in.gcount() != std::streamsize(img.bytes.size()))
        fail("format_error", "truncated PGM payload: " + path.string());
    return img;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("io_error", "cannot write image: " + path.string());
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.bytes.data()), std::streamsize(img.bytes.size()));
    if (!out) fail("io_error", "short write: " + path.string());
}

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};

GrayImage read_png(const std::filesystem::path& path) {
    std::unique_ptr<FILE, FileCloser> fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail("io_error", "cannot open image: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail("io_error", "libpng init failure");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail("io_error", "libpng init failure");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail("format_error", "libpng decode failure: " + path.string());
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_uint_32 w = png_get_image_width(png, info);
    png_uint_32 h = png_get_image_height(png, info);
    png_byte color = png_get_color_type(png, info);
    png_byte depth = png_get_bit_depth(png, info);

    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (color & PNG_COLOR_MASK_COLOR) png_set_rgb_to_gray_fixed(png, 1, -1, -1);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    GrayImage img;
    img.width = int(w);
    img.height = int(h);
    img.bytes.resize(size_t(w) * h);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 r = 0; r < h; ++r) rows[r] = img.bytes.data() + size_t(r) * w;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png_gray(const GrayImage& img, const std::filesystem::path& path) {
    std::unique_ptr<FILE, FileCloser> fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail("io_error", "cannot write image: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info) fail("io_error", "libpng init failure");
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail("io_error", "libpng encode failure: " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(img.height);
    for (int r = 0; r < img.height; ++r)
        rows[r] = const_cast<png_bytep>(img.bytes.data() + size_t(r) * img.width);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

GrayImage read_gray(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".pgm") return read_pgm(path);
    if (ext == ".png") return read_png(path);
    fail("format_error", "unsupported image extension: " + path.string());
}

} // namespace

Frame load_frame(const std::filesystem::path& path) {
    GrayImage img = read_gray(path);
    Frame f = Frame::zeros(img.width, img.height);
    for (size_t i = 0; i < img.bytes.size(); ++i) f.pixels[i] = float(img.bytes[i]) / 255.f;
    return f;
}

void save_frame_pgm(const Frame& img, const std::filesystem::path& path) {
    GrayImage g{img.width, img.height, {}};
    g.bytes.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) g.bytes[i] = quantize(img.pixels[i]);
    write_pgm(g, path);
}

void save_frame_png(const Frame& img, const std::filesystem::path& path) {
    GrayImage g{img.width, img.height, {}};
    g.bytes.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) g.bytes[i] = quantize(img.pixels[i]);
    write_png_gray(g, path);
}

Mask load_mask(const std::filesystem::path& path) {
    GrayImage img = read_gray(path);
    Mask m = Mask::zeros(img.width, img.height);
    for (size_t i = 0; i < img.bytes.size(); ++i) m.labels[i] = img.bytes[i] ? 1 : 0;
    return m;
}

void save_mask_pgm(const Mask& m, const std::filesystem::path& path) {
    GrayImage g{m.width, m.height, {}};
    g.bytes.resize(m.size());
    for (size_t i = 0; i < m.size(); ++i) g.bytes[i] = m.labels[i] ? 255 : 0;
    write_pgm(g, path);
}

void save_overlay_png(const Frame& base, const std::vector<OverlayContour>& contours,
                      const std::filesystem::path& path) {
    const int w = base.width, h = base.height;
    std::vector<std::uint8_t> rgb(size_t(w) * h * 3);
    for (size_t i = 0; i < base.size(); ++i) {
        std::uint8_t v = quantize(base.pixels[i]);
        rgb[3 * i] = rgb[3 * i + 1] = rgb[3 * i + 2] = v;
    }
    auto put = [&](int x, int y, const std::array<std::uint8_t, 3>& color) {
        if (x < 0 || x >= w || y < 0 || y >= h) return;
        size_t i = (size_t(y) * w + x) * 3;
        rgb[i] = color[0];
        rgb[i + 1] = color[1];
        rgb[i + 2] = color[2];
    };
    for (const auto& oc : contours) {
        const auto& pts = oc.contour.points;
        if (pts.size() < 2) continue;
        for (size_t i = 0; i < pts.size(); ++i) {
            Vec2 a = pts[i];
            Vec2 b = pts[(i + 1) % pts.size()];
            double len = (b - a).norm();
            int steps = std::max(1, int(std::ceil(len * 2.0)));
            for (int s = 0; s <= steps; ++s) {
                Vec2 p = a + (b - a) * (double(s) / steps);
                put(int(std::lround(p.x)), int(std::lround(p.y)), oc.rgb);
            }
        }
    }

    std::unique_ptr<FILE, FileCloser> fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail("io_error", "cannot write image: " + path.string());
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (!png || !info) fail("io_error", "libpng init failure");
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail("io_error", "libpng encode failure: " + path.string());
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, png_uint_32(w), png_uint_32(h), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(h);
    for (int r = 0; r < h; ++r) rows[r] = rgb.data() + size_t(r) * w * 3;
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace tan
