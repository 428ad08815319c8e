#pragma once

#include "tan/geometry.hpp"
#include "tan/image.hpp"

namespace tan {

// Resampling request. `transform` maps input pixel coordinates to output
// pixel coordinates; sampling is output-driven through its inverse, so every
// output pixel is defined. Pixel (r,c) samples the continuous point
// (c+0.5, r+0.5).
struct WarpSpec {
    AffineTransform transform;
    int out_width = kCanvasSize;
    int out_height = kCanvasSize;
    float fill = 0.f;
    int threads = 1;
};

// Bilinear intensity resampling; out-of-source samples blend toward `fill`.
Frame warp_image(const Frame& img, const WarpSpec& spec);

// Nearest-neighbor label resampling; output stays binary.
Mask warp_mask(const Mask& m, const WarpSpec& spec);

// Aspect-preserving map of a src_w x src_h frame onto the destination canvas,
// centered, with zero padding on the shorter side.
AffineTransform letterbox_transform(int src_w, int src_h,
                                    int dst_w = kCanvasSize, int dst_h = kCanvasSize);

} // namespace tan
