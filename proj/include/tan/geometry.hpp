#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <span>
#include <vector>

namespace tan {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Apex plus the two mitral annulus points, in pixel coordinates.
struct LandmarkTriple {
    Vec2 apex;
    Vec2 annulus_left;
    Vec2 annulus_right;

    std::array<Vec2, 3> points() const { return {apex, annulus_left, annulus_right}; }
    static LandmarkTriple from_points(const std::array<Vec2, 3>& p) {
        return {p[0], p[1], p[2]};
    }
};

// Triangle area below 1e-6 of the squared bounding-box diagonal counts as
// degenerate; pixel-scale triples stay well above this.
bool is_degenerate_triple(const LandmarkTriple& t);

// Row-major 2x3 matrix [[a, b, tx], [c, d, ty]] mapping source pixel
// coordinates to destination pixel coordinates.
struct AffineTransform {
    double a = 1.0, b = 0.0, tx = 0.0;
    double c = 0.0, d = 1.0, ty = 0.0;

    Vec2 apply(const Vec2& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }
    double det() const { return a * d - b * c; }

    static AffineTransform identity() { return {}; }
    static AffineTransform translation(double dx, double dy);
    static AffineTransform scaling(double sx, double sy, const Vec2& center = {0, 0});
    static AffineTransform rotation_deg(double degrees, const Vec2& center = {0, 0});
};

// Exact three-point affine estimation: solves the two 3x3 linear systems tying
// src landmark coordinates to dst landmark coordinates. Throws on degenerate
// triples.
AffineTransform estimate_affine(const LandmarkTriple& src, const LandmarkTriple& dst);

AffineTransform invert(const AffineTransform& t);

// apply `first`, then `second`.
AffineTransform compose(const AffineTransform& first, const AffineTransform& second);

std::vector<Vec2> apply_to_points(const AffineTransform& t, std::span<const Vec2> pts);
LandmarkTriple apply_to_landmarks(const AffineTransform& t, const LandmarkTriple& lmk);

inline constexpr int kCanvasSize = 224;

// Mean landmark layout in canonical canvas coordinates.
struct ShapeTemplate {
    LandmarkTriple landmarks;
    int canvas_width = kCanvasSize;
    int canvas_height = kCanvasSize;
};

// Averages landmark triples (each first normalized by its frame dimensions)
// and places the mean into the canonical canvas. The region of interest is the
// mean triple's bounding box expanded by half its extent toward the bottom and
// the left plus a 5% margin on top and right; it is fitted into the canvas
// preserving aspect ratio, padding the shorter side symmetrically.
ShapeTemplate build_template(const std::vector<LandmarkTriple>& samples,
                             const std::vector<std::pair<int, int>>& frame_dims);

void save_template(const ShapeTemplate& tmpl, const std::filesystem::path& path);
ShapeTemplate load_template(const std::filesystem::path& path);

} // namespace tan
