#pragma once

#include <cstdint>
#include <vector>

namespace tan {

// Single-channel intensity image, row-major, values in [0,1].
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<float> pixels;

    static Frame zeros(int w, int h) { return {w, h, std::vector<float>(size_t(w) * h, 0.f)}; }

    float at(int r, int c) const { return pixels[size_t(r) * width + c]; }
    float& at(int r, int c) { return pixels[size_t(r) * width + c]; }
    size_t size() const { return pixels.size(); }
    bool same_dims(const Frame& o) const { return width == o.width && height == o.height; }
};

// Binary label image matching a Frame; 0 = background, 1 = foreground.
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> labels;

    static Mask zeros(int w, int h) { return {w, h, std::vector<std::uint8_t>(size_t(w) * h, 0)}; }

    std::uint8_t at(int r, int c) const { return labels[size_t(r) * width + c]; }
    std::uint8_t& at(int r, int c) { return labels[size_t(r) * width + c]; }
    size_t size() const { return labels.size(); }
    bool same_dims(const Mask& o) const { return width == o.width && height == o.height; }

    long area() const {
        long n = 0;
        for (auto v : labels) n += v;
        return n;
    }
};

// Bilinear sample in index coordinates (pixel (r,c) holds the value at
// x = c, y = r), clamped at the borders. Used by the tracker.
float bilinear_at(const Frame& img, double x, double y);

} // namespace tan
