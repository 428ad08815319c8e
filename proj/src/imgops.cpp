#include "tan/imgops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tan {

Frame box_blur(const Frame& img, int radius) {
    const int w = img.width, h = img.height;
    Frame out = Frame::zeros(w, h);
    if (radius <= 0) {
        out.pixels = img.pixels;
        return out;
    }

    // Summed-area table with one pad row/column of zeros.
    std::vector<double> sat(size_t(w + 1) * (h + 1), 0.0);
    for (int r = 0; r < h; ++r) {
        double rowsum = 0.0;
        for (int c = 0; c < w; ++c) {
            rowsum += img.at(r, c);
            sat[size_t(r + 1) * (w + 1) + (c + 1)] = sat[size_t(r) * (w + 1) + (c + 1)] + rowsum;
        }
    }
    auto rect_sum = [&](int r0, int c0, int r1, int c1) { // inclusive box
        return sat[size_t(r1 + 1) * (w + 1) + (c1 + 1)] - sat[size_t(r0) * (w + 1) + (c1 + 1)] -
               sat[size_t(r1 + 1) * (w + 1) + c0] + sat[size_t(r0) * (w + 1) + c0];
    };

    for (int r = 0; r < h; ++r) {
        int r0 = std::max(0, r - radius), r1 = std::min(h - 1, r + radius);
        for (int c = 0; c < w; ++c) {
            int c0 = std::max(0, c - radius), c1 = std::min(w - 1, c + radius);
            double n = double(r1 - r0 + 1) * (c1 - c0 + 1);
            out.at(r, c) = float(rect_sum(r0, c0, r1, c1) / n);
        }
    }
    return out;
}

Frame gradient_magnitude(const Frame& img) {
    const int w = img.width, h = img.height;
    Frame out = Frame::zeros(w, h);
    for (int r = 0; r < h; ++r) {
        int rm = std::max(0, r - 1), rp = std::min(h - 1, r + 1);
        for (int c = 0; c < w; ++c) {
            int cm = std::max(0, c - 1), cp = std::min(w - 1, c + 1);
            double gx = (img.at(r, cp) - img.at(r, cm)) * 0.5;
            double gy = (img.at(rp, c) - img.at(rm, c)) * 0.5;
            out.at(r, c) = float(std::sqrt(gx * gx + gy * gy));
        }
    }
    return out;
}

namespace {

// 1-D squared-distance lower envelope (Felzenszwalb-Huttenlocher).
void edt_1d(const std::vector<float>& f, std::vector<float>& d, std::vector<int>& v,
            std::vector<float>& z) {
    const int n = int(f.size());
    int k = 0;
    v[0] = 0;
    z[0] = -std::numeric_limits<float>::infinity();
    z[1] = std::numeric_limits<float>::infinity();
    for (int q = 1; q < n; ++q) {
        float s;
        while (true) {
            int p = v[k];
            s = ((f[q] + float(q) * q) - (f[p] + float(p) * p)) / (2.f * (q - p));
            if (s <= z[k]) {
                --k;
            } else {
                break;
            }
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = std::numeric_limits<float>::infinity();
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < float(q)) ++k;
        float dq = float(q) - v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

} // namespace

std::vector<float> squared_distance_to(const Mask& m, std::uint8_t value) {
    const int w = m.width, h = m.height;
    const float inf = 1e18f;
    std::vector<float> grid(size_t(w) * h);
    for (size_t i = 0; i < grid.size(); ++i) grid[i] = (m.labels[i] == value) ? 0.f : inf;

    std::vector<float> col(h), dcol(h), row(w), drow(w);
    std::vector<int> v(std::max(w, h));
    std::vector<float> z(std::max(w, h) + 1);

    for (int c = 0; c < w; ++c) {
        for (int r = 0; r < h; ++r) col[r] = grid[size_t(r) * w + c];
        edt_1d(col, dcol, v, z);
        for (int r = 0; r < h; ++r) grid[size_t(r) * w + c] = dcol[r];
    }
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) row[c] = grid[size_t(r) * w + c];
        edt_1d(row, drow, v, z);
        for (int c = 0; c < w; ++c) grid[size_t(r) * w + c] = drow[c];
    }
    return grid;
}

Frame downsample2x(const Frame& img) {
    int w = img.width / 2, h = img.height / 2;
    Frame out = Frame::zeros(w, h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            out.at(r, c) = 0.25f * (img.at(2 * r, 2 * c) + img.at(2 * r, 2 * c + 1) +
                                    img.at(2 * r + 1, 2 * c) + img.at(2 * r + 1, 2 * c + 1));
    return out;
}

} // namespace tan
