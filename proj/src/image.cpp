#include "tan/image.hpp"

#include <algorithm>
#include <cmath>

namespace tan {

float bilinear_at(const Frame& img, double x, double y) {
    x = std::clamp(x, 0.0, double(img.width - 1));
    y = std::clamp(y, 0.0, double(img.height - 1));
    int x0 = int(x);
    int y0 = int(y);
    int x1 = std::min(x0 + 1, img.width - 1);
    int y1 = std::min(y0 + 1, img.height - 1);
    double fx = x - x0;
    double fy = y - y0;
    double v00 = img.at(y0, x0), v01 = img.at(y0, x1);
    double v10 = img.at(y1, x0), v11 = img.at(y1, x1);
    double top = v00 + fx * (v01 - v00);
    double bot = v10 + fx * (v11 - v10);
    return float(top + fy * (bot - top));
}

} // namespace tan
