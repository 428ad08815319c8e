#pragma once

#include "tan/image.hpp"

namespace tan {

// Mean filter over a (2*radius+1)^2 window; windows are clipped at the image
// border and normalized by the clipped pixel count.
Frame box_blur(const Frame& img, int radius);

// Central-difference gradient magnitude, one-sided at the borders.
Frame gradient_magnitude(const Frame& img);

// Squared Euclidean distance to the nearest pixel with the given label value
// (exact, two-pass lower-envelope transform). Pixels already at `value` get 0.
std::vector<float> squared_distance_to(const Mask& m, std::uint8_t value);

// 2x box downsample; odd trailing row/column is dropped.
Frame downsample2x(const Frame& img);

} // namespace tan
