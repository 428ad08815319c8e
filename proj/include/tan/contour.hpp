#pragma once

#include "tan/geometry.hpp"
#include "tan/image.hpp"

#include <vector>

namespace tan {

// Ordered closed boundary polyline in pixel coordinates.
struct ContourPolyline {
    std::vector<Vec2> points;
    bool closed = true;
};

double polygon_signed_area(const std::vector<Vec2>& pts);
double polygon_perimeter(const std::vector<Vec2>& pts);

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

// Points along the closed polyline at most `max_spacing` apart (original
// vertices are kept).
std::vector<Vec2> densify_closed_polyline(const std::vector<Vec2>& pts, double max_spacing);

// Proper or touching intersection between non-adjacent segments of a closed
// polyline; collinear overlaps count.
bool polyline_self_intersects(const std::vector<Vec2>& pts);

// Rasterizes the polygon with the even-odd rule sampled at integer pixel
// centers (pixel (r,c) is the point (c, r)); centers exactly on an edge count
// as inside. Throws on contours with fewer than 3 points.
Mask mask_from_contour(const ContourPolyline& contour, int width, int height);

struct ContourFromMaskResult {
    ContourPolyline contour;
    // Set when the mask had several foreground components; the contour then
    // follows the largest one.
    bool multiple_components = false;
};

// Outer boundary of the largest 4-connected foreground component, traced
// along the half-integer pixel-cell lattice. A single pixel (r,c) yields the
// four corners of its unit cell. Throws on empty masks.
ContourFromMaskResult contour_from_mask(const Mask& m);

} // namespace tan
