#include "tan/contour.hpp"

#include "tan/error.hpp"

#include <algorithm>
#include <cmath>

namespace tan {

double polygon_signed_area(const std::vector<Vec2>& pts) {
    double a = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

double polygon_perimeter(const std::vector<Vec2>& pts) {
    double len = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) len += (pts[(i + 1) % n] - pts[i]).norm();
    return len;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = ab.norm2();
    if (len2 <= 0.0) return (p - a).norm();
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    Vec2 proj = a + ab * t;
    return (p - proj).norm();
}

std::vector<Vec2> densify_closed_polyline(const std::vector<Vec2>& pts, double max_spacing) {
    std::vector<Vec2> out;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        out.push_back(a);
        double len = (b - a).norm();
        int steps = int(std::ceil(len / max_spacing));
        for (int k = 1; k < steps; ++k) out.push_back(a + (b - a) * (double(k) / steps));
    }
    return out;
}

namespace {

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    double v = cross(b - a, c - a);
    const double eps = 1e-12;
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}

bool on_segment_collinear(const Vec2& a, const Vec2& b, const Vec2& p) {
    return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
           std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
}

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment_collinear(a, b, c)) return true;
    if (o2 == 0 && on_segment_collinear(a, b, d)) return true;
    if (o3 == 0 && on_segment_collinear(c, d, a)) return true;
    if (o4 == 0 && on_segment_collinear(c, d, b)) return true;
    return false;
}

} // namespace

bool polyline_self_intersects(const std::vector<Vec2>& pts) {
    const size_t n = pts.size();
    if (n < 4) return false;
    for (size_t i = 0; i < n; ++i) {
        size_t i2 = (i + 1) % n;
        for (size_t j = i + 1; j < n; ++j) {
            size_t j2 = (j + 1) % n;
            // skip adjacent segments (shared endpoint)
            if (i == j || i2 == j || j2 == i) continue;
            if (segments_intersect(pts[i], pts[i2], pts[j], pts[j2])) return true;
        }
    }
    return false;
}

Mask mask_from_contour(const ContourPolyline& contour, int width, int height) {
    if (contour.points.size() < 3)
        fail("degenerate_contour", "polygon rasterization needs at least 3 points");
    if (width <= 0 || height <= 0) fail("invalid_argument", "non-positive raster dimensions");

    struct Edge {
        double x1, y1, x2, y2;
    };
    std::vector<Edge> edges;
    const auto& pts = contour.points;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % n];
        if (p.x == q.x && p.y == q.y) continue;
        edges.push_back({p.x, p.y, q.x, q.y});
    }
    if (edges.empty()) fail("degenerate_contour", "polygon has zero-length boundary");

    Mask out = Mask::zeros(width, height);
    const double eps = 1e-9;

    std::vector<double> xs;
    std::vector<const Edge*> row_edges;
    for (int r = 0; r < height; ++r) {
        const double y = double(r);
        xs.clear();
        row_edges.clear();
        for (const auto& e : edges) {
            double ylo = std::min(e.y1, e.y2), yhi = std::max(e.y1, e.y2);
            if (y >= ylo - eps && y <= yhi + eps) row_edges.push_back(&e);
            // even-odd crossing with half-open vertex rule
            if ((e.y1 <= y && y < e.y2) || (e.y2 <= y && y < e.y1))
                xs.push_back(e.x1 + (y - e.y1) * (e.x2 - e.x1) / (e.y2 - e.y1));
        }
        std::sort(xs.begin(), xs.end());

        for (int c = 0; c < width; ++c) {
            const double x = double(c);
            // parity of crossings strictly left of the pixel center
            size_t cnt = std::lower_bound(xs.begin(), xs.end(), x - eps) - xs.begin();
            bool inside = (cnt & 1) != 0;
            if (!inside) {
                // centers lying exactly on the boundary count as inside
                for (const Edge* e : row_edges) {
                    double crossv = (e->x2 - e->x1) * (y - e->y1) - (e->y2 - e->y1) * (x - e->x1);
                    if (std::abs(crossv) <= eps * std::max(1.0, std::abs(e->x2 - e->x1) +
                                                                    std::abs(e->y2 - e->y1)) &&
                        x >= std::min(e->x1, e->x2) - eps && x <= std::max(e->x1, e->x2) + eps) {
                        inside = true;
                        break;
                    }
                }
            }
            if (inside) out.at(r, c) = 1;
        }
    }
    return out;
}

namespace {

// Largest 4-connected foreground component; returns its pixel flags and size.
std::vector<std::uint8_t> largest_component(const Mask& m, bool* multiple, long* size_out) {
    const int w = m.width, h = m.height;
    std::vector<int> label(size_t(w) * h, -1);
    int components = 0;
    long best_size = 0;
    int best_label = -1;

    std::vector<int> stack;
    for (int start = 0; start < w * h; ++start) {
        if (m.labels[start] == 0 || label[start] >= 0) continue;
        int cur = components++;
        long size = 0;
        stack.push_back(start);
        label[start] = cur;
        while (!stack.empty()) {
            int idx = stack.back();
            stack.pop_back();
            ++size;
            int r = idx / w, c = idx % w;
            const int nr[4] = {r - 1, r + 1, r, r};
            const int nc[4] = {c, c, c - 1, c + 1};
            for (int k = 0; k < 4; ++k) {
                if (nr[k] < 0 || nr[k] >= h || nc[k] < 0 || nc[k] >= w) continue;
                int nidx = nr[k] * w + nc[k];
                if (m.labels[nidx] != 0 && label[nidx] < 0) {
                    label[nidx] = cur;
                    stack.push_back(nidx);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_label = cur;
        }
    }

    *multiple = components > 1;
    *size_out = best_size;
    std::vector<std::uint8_t> flags(size_t(w) * h, 0);
    if (best_label >= 0)
        for (size_t i = 0; i < flags.size(); ++i) flags[i] = (label[i] == best_label) ? 1 : 0;
    return flags;
}

} // namespace

ContourFromMaskResult contour_from_mask(const Mask& m) {
    bool multiple = false;
    long comp_size = 0;
    auto comp = largest_component(m, &multiple, &comp_size);
    if (comp_size == 0) fail("empty_mask", "mask has no foreground pixels");

    const int w = m.width, h = m.height;
    auto inside = [&](int r, int c) {
        return r >= 0 && r < h && c >= 0 && c < w && comp[size_t(r) * w + c] != 0;
    };

    // topmost-leftmost foreground pixel
    int r0 = -1, c0 = -1;
    for (int r = 0; r < h && r0 < 0; ++r)
        for (int c = 0; c < w; ++c)
            if (inside(r, c)) {
                r0 = r;
                c0 = c;
                break;
            }

    // Walk the cell-boundary lattice with the region on the right of travel.
    // Corner (ci, cj) sits at continuous (cj - 0.5, ci - 0.5). Directions:
    // 0=+x, 1=+y, 2=-x, 3=-y. The state is (corner, outgoing direction); at
    // the top-left corner of the topmost-leftmost pixel the outgoing
    // direction is +x.
    auto decide = [&](int ci, int cj, int incoming) {
        int left_r = 0, left_c = 0, right_r = 0, right_c = 0;
        switch (incoming) {
            case 0: left_r = ci - 1; left_c = cj;     right_r = ci;     right_c = cj;     break;
            case 1: left_r = ci;     left_c = cj;     right_r = ci;     right_c = cj - 1; break;
            case 2: left_r = ci;     left_c = cj - 1; right_r = ci - 1; right_c = cj - 1; break;
            case 3: left_r = ci - 1; left_c = cj - 1; right_r = ci - 1; right_c = cj;     break;
        }
        if (inside(left_r, left_c)) return (incoming + 3) % 4; // turn left
        if (inside(right_r, right_c)) return incoming;         // straight
        return (incoming + 1) % 4;                             // turn right
    };

    int ci = r0, cj = c0, dir = 0;
    std::vector<Vec2> pts;
    pts.reserve(64);
    do {
        pts.push_back({cj - 0.5, ci - 0.5});
        switch (dir) {
            case 0: ++cj; break;
            case 1: ++ci; break;
            case 2: --cj; break;
            case 3: --ci; break;
        }
        dir = decide(ci, cj, dir);
    } while (!(ci == r0 && cj == c0 && dir == 0));

    ContourFromMaskResult res;
    res.contour.points = std::move(pts);
    res.contour.closed = true;
    res.multiple_components = multiple;
    return res;
}

} // namespace tan
