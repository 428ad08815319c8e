#include "tan/geometry.hpp"

#include "tan/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace tan {

namespace {

double triangle_area(const std::array<Vec2, 3>& p) {
    return 0.5 * std::abs(cross(p[1] - p[0], p[2] - p[0]));
}

double bbox_diag2(const std::array<Vec2, 3>& p) {
    double minx = std::min({p[0].x, p[1].x, p[2].x});
    double maxx = std::max({p[0].x, p[1].x, p[2].x});
    double miny = std::min({p[0].y, p[1].y, p[2].y});
    double maxy = std::max({p[0].y, p[1].y, p[2].y});
    double dx = maxx - minx, dy = maxy - miny;
    return dx * dx + dy * dy;
}

} // namespace

bool is_degenerate_triple(const LandmarkTriple& t) {
    auto p = t.points();
    for (const auto& v : p)
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) return true;
    double d2 = bbox_diag2(p);
    if (d2 <= 0.0) return true;
    return triangle_area(p) < 1e-6 * d2;
}

AffineTransform AffineTransform::translation(double dx, double dy) {
    AffineTransform t;
    t.tx = dx;
    t.ty = dy;
    return t;
}

AffineTransform AffineTransform::scaling(double sx, double sy, const Vec2& center) {
    AffineTransform t;
    t.a = sx;
    t.d = sy;
    t.tx = center.x * (1.0 - sx);
    t.ty = center.y * (1.0 - sy);
    return t;
}

AffineTransform AffineTransform::rotation_deg(double degrees, const Vec2& center) {
    double rad = degrees * 3.14159265358979323846 / 180.0;
    double co = std::cos(rad), si = std::sin(rad);
    AffineTransform t;
    t.a = co;
    t.b = -si;
    t.c = si;
    t.d = co;
    t.tx = center.x - co * center.x + si * center.y;
    t.ty = center.y - si * center.x - co * center.y;
    return t;
}

AffineTransform estimate_affine(const LandmarkTriple& src, const LandmarkTriple& dst) {
    if (is_degenerate_triple(src) || is_degenerate_triple(dst))
        fail("degenerate_landmarks", "affine estimation requires non-collinear landmark triples");

    auto s = src.points();
    auto d = dst.points();

    // Cramer solve of [x_k y_k 1][a b tx]^T = x'_k (and the y row).
    double det = s[0].x * (s[1].y - s[2].y) - s[0].y * (s[1].x - s[2].x) +
                 (s[1].x * s[2].y - s[2].x * s[1].y);
    if (std::abs(det) < 1e-300)
        fail("degenerate_landmarks", "source landmark triple is numerically singular");

    auto solve_row = [&](double r0, double r1, double r2) {
        double da = r0 * (s[1].y - s[2].y) - s[0].y * (r1 - r2) + (r1 * s[2].y - r2 * s[1].y);
        double db = s[0].x * (r1 - r2) - r0 * (s[1].x - s[2].x) + (s[1].x * r2 - s[2].x * r1);
        double dt = s[0].x * (s[1].y * r2 - s[2].y * r1) - s[0].y * (s[1].x * r2 - s[2].x * r1) +
                    r0 * (s[1].x * s[2].y - s[2].x * s[1].y);
        return std::array<double, 3>{da / det, db / det, dt / det};
    };

    auto rx = solve_row(d[0].x, d[1].x, d[2].x);
    auto ry = solve_row(d[0].y, d[1].y, d[2].y);

    AffineTransform t;
    t.a = rx[0];
    t.b = rx[1];
    t.tx = rx[2];
    t.c = ry[0];
    t.d = ry[1];
    t.ty = ry[2];
    return t;
}

AffineTransform invert(const AffineTransform& t) {
    double det = t.det();
    if (std::abs(det) < 1e-12)
        fail("singular_transform", "affine transform is not invertible");
    AffineTransform r;
    r.a = t.d / det;
    r.b = -t.b / det;
    r.c = -t.c / det;
    r.d = t.a / det;
    r.tx = -(r.a * t.tx + r.b * t.ty);
    r.ty = -(r.c * t.tx + r.d * t.ty);
    return r;
}

AffineTransform compose(const AffineTransform& first, const AffineTransform& second) {
    AffineTransform r;
    r.a = second.a * first.a + second.b * first.c;
    r.b = second.a * first.b + second.b * first.d;
    r.c = second.c * first.a + second.d * first.c;
    r.d = second.c * first.b + second.d * first.d;
    r.tx = second.a * first.tx + second.b * first.ty + second.tx;
    r.ty = second.c * first.tx + second.d * first.ty + second.ty;
    return r;
}

std::vector<Vec2> apply_to_points(const AffineTransform& t, std::span<const Vec2> pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(t.apply(p));
    return out;
}

LandmarkTriple apply_to_landmarks(const AffineTransform& t, const LandmarkTriple& lmk) {
    return {t.apply(lmk.apex), t.apply(lmk.annulus_left), t.apply(lmk.annulus_right)};
}

ShapeTemplate build_template(const std::vector<LandmarkTriple>& samples,
                             const std::vector<std::pair<int, int>>& frame_dims) {
    if (samples.empty()) fail("empty_input", "template needs at least one landmark sample");
    if (samples.size() != frame_dims.size())
        fail("invalid_argument", "one frame dimension pair required per landmark sample");

    Vec2 mean[3] = {};
    for (size_t i = 0; i < samples.size(); ++i) {
        if (is_degenerate_triple(samples[i]))
            fail("degenerate_landmarks", "collinear landmark sample in template input");
        auto [w, h] = frame_dims[i];
        if (w <= 0 || h <= 0) fail("invalid_argument", "non-positive frame dimensions");
        auto pts = samples[i].points();
        for (int k = 0; k < 3; ++k) {
            mean[k].x += pts[k].x / w;
            mean[k].y += pts[k].y / h;
        }
    }
    for (auto& m : mean) m = m / double(samples.size());

    LandmarkTriple mean_triple{mean[0], mean[1], mean[2]};
    if (is_degenerate_triple(mean_triple))
        fail("degenerate_landmarks", "mean landmark triple is collinear");

    // ROI around the mean triple: half the bounding box added below and to the
    // left (the cavity sits top-right), a 5% margin on top and right, then an
    // aspect-preserving fit into the canvas with symmetric padding.
    double minx = std::min({mean[0].x, mean[1].x, mean[2].x});
    double maxx = std::max({mean[0].x, mean[1].x, mean[2].x});
    double miny = std::min({mean[0].y, mean[1].y, mean[2].y});
    double maxy = std::max({mean[0].y, mean[1].y, mean[2].y});
    double wb = maxx - minx, hb = maxy - miny;

    double roi_x0 = minx - 0.5 * wb;
    double roi_x1 = maxx + 0.05 * wb;
    double roi_y0 = miny - 0.05 * hb;
    double roi_y1 = maxy + 0.5 * hb;
    double roi_w = roi_x1 - roi_x0;
    double roi_h = roi_y1 - roi_y0;

    const double canvas = double(kCanvasSize);
    double s = std::min(canvas / roi_w, canvas / roi_h);
    double ox = (canvas - s * roi_w) / 2.0;
    double oy = (canvas - s * roi_h) / 2.0;

    auto place = [&](const Vec2& p) -> Vec2 {
        return {(p.x - roi_x0) * s + ox, (p.y - roi_y0) * s + oy};
    };

    ShapeTemplate tmpl;
    tmpl.landmarks = {place(mean[0]), place(mean[1]), place(mean[2])};
    return tmpl;
}

void save_template(const ShapeTemplate& tmpl, const std::filesystem::path& path) {
    nlohmann::json j;
    j["canvas"] = {tmpl.canvas_width, tmpl.canvas_height};
    j["apex"] = {tmpl.landmarks.apex.x, tmpl.landmarks.apex.y};
    j["annulus_left"] = {tmpl.landmarks.annulus_left.x, tmpl.landmarks.annulus_left.y};
    j["annulus_right"] = {tmpl.landmarks.annulus_right.x, tmpl.landmarks.annulus_right.y};
    std::ofstream out(path);
    if (!out) fail("io_error", "cannot write template file: " + path.string());
    out << j.dump(2) << "\n";
}

ShapeTemplate load_template(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("io_error", "cannot open template file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("schema_error", "template JSON parse failure: " + std::string(e.what()));
    }
    try {
        ShapeTemplate tmpl;
        tmpl.canvas_width = j.at("canvas").at(0).get<int>();
        tmpl.canvas_height = j.at("canvas").at(1).get<int>();
        auto pt = [&](const char* key) -> Vec2 {
            return {j.at(key).at(0).get<double>(), j.at(key).at(1).get<double>()};
        };
        tmpl.landmarks = {pt("apex"), pt("annulus_left"), pt("annulus_right")};
        if (is_degenerate_triple(tmpl.landmarks))
            fail("degenerate_landmarks", "template landmarks are collinear");
        return tmpl;
    } catch (const nlohmann::json::exception& e) {
        fail("schema_error", "template JSON missing field: " + std::string(e.what()));
    }
}

} // namespace tan
