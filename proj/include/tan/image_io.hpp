#pragma once

#include "tan/contour.hpp"
#include "tan/image.hpp"

#include <array>
#include <filesystem>

namespace tan {

// 8-bit grayscale I/O. Intensities are scaled to [0,1] on load and quantized
// with round(255*v) on save. PGM is binary P5 with maxval 255.
Frame load_frame(const std::filesystem::path& path); // .pgm or .png by extension
void save_frame_pgm(const Frame& img, const std::filesystem::path& path);
void save_frame_png(const Frame& img, const std::filesystem::path& path);

Mask load_mask(const std::filesystem::path& path); // nonzero pixel -> 1
void save_mask_pgm(const Mask& m, const std::filesystem::path& path);

// Grayscale base with contours drawn on top, for visual inspection.
struct OverlayContour {
    ContourPolyline contour;
    std::array<std::uint8_t, 3> rgb{255, 0, 0};
};
void save_overlay_png(const Frame& base, const std::vector<OverlayContour>& contours,
                      const std::filesystem::path& path);

} // namespace tan
