#pragma once

#include "tan/contour.hpp"
#include "tan/geometry.hpp"
#include "tan/image.hpp"

#include <vector>

namespace tan {

struct FlowConfig {
    int window = 11;      // odd, >= 3
    int pyramid_levels = 3;
    int downscale = 2;
    int max_iters = 10;
    double epsilon = 0.01;   // update norm stop, px
    double min_eigen = 1e-4; // per-pixel-normalized minimum eigenvalue of G
};

enum class TrackStatus { ok, low_confidence, out_of_bounds };

struct TrackedPoint {
    Vec2 position;           // input position on the previous frame
    Vec2 velocity{0.0, 0.0}; // displacement to the current frame, px/frame
    TrackStatus status = TrackStatus::ok;
};

// Fixed-count contour sample, uniformly spaced in arc length at construction.
struct ContourPoints {
    std::vector<Vec2> points;
};

inline constexpr int kContourPointCount = 20;

// n points at uniform arc length along the closed polyline, starting at the
// vertex with minimal y (ties broken by minimal x), counter-clockwise
// (positive shoelace area).
ContourPoints resample_contour(const ContourPolyline& contour, int n = kContourPointCount);

// Image pyramid with 2x box-downsampled levels.
struct Pyramid {
    std::vector<Frame> levels;
    static Pyramid build(const Frame& img, const FlowConfig& cfg);
};

// Iterative pyramidal solve of the window-accumulated normal equations
// G v = b, coarse to fine, with bilinear subpixel sampling. Gradients come
// from the previous frame; the temporal difference is re-sampled at the
// warped position each iteration.
TrackedPoint lk_track_point(const Pyramid& prev, const Pyramid& cur, const Vec2& p,
                            const FlowConfig& cfg);
TrackedPoint lk_track_point(const Frame& prev, const Frame& cur, const Vec2& p,
                            const FlowConfig& cfg);

// Moves every contour point by its tracked velocity. Low-confidence points
// take the velocity interpolated circularly from the nearest confident
// neighbors. Point count and order are preserved. Throws when no point
// tracks confidently.
ContourPoints propagate_contour(const Frame& prev, const Frame& cur, const ContourPoints& c,
                                const FlowConfig& cfg);

struct ReconstructResult {
    Mask mask;
    // Spline self-intersected; the straight polygon through the points was
    // rasterized instead.
    bool used_fallback = false;
};

// Closed periodic Catmull-Rom spline through the points, 8 subdivisions per
// segment, rasterized with mask_from_contour.
ReconstructResult reconstruct_mask(const ContourPoints& pts, int width, int height);

// Densified spline polyline used by reconstruct_mask (before rasterization).
ContourPolyline spline_through(const ContourPoints& pts);

std::vector<Vec2> catmull_rom_closed(const std::vector<Vec2>& pts, int subdivisions);

// max(directed(a->b), directed(b->a)); directed distances evaluate densified
// vertices against the other polyline's segments exactly, with a local
// refinement pass around the coarse maximum.
double hausdorff(const ContourPolyline& a, const ContourPolyline& b);

} // namespace tan
