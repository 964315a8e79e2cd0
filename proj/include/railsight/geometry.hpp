#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace railsight {

/// Axis-aligned rectangle, half-open: x in [x0, x1), y in [y0, y1).
struct RectI {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
    bool empty() const { return x1 <= x0 || y1 <= y0; }
    bool contains(int x, int y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }

    RectI clamped(int w, int h) const {
        RectI r{std::max(0, x0), std::max(0, y0), std::min(w, x1), std::min(h, y1)};
        r.x1 = std::max(r.x0, r.x1);
        r.y1 = std::max(r.y0, r.y1);
        return r;
    }

    bool operator==(const RectI&) const = default;
};

inline RectI intersect(const RectI& a, const RectI& b) {
    RectI r{std::max(a.x0, b.x0), std::max(a.y0, b.y0), std::min(a.x1, b.x1), std::min(a.y1, b.y1)};
    if (r.x1 < r.x0) r.x1 = r.x0;
    if (r.y1 < r.y0) r.y1 = r.y0;
    return r;
}

/// Bounding box as (top-left, size). w and h must be positive for a valid box.
struct BBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    RectI rect() const { return RectI{x, y, x + w, y + h}; }
    double cx() const { return x + 0.5 * w; }
    double cy() const { return y + 0.5 * h; }

    bool operator==(const BBox&) const = default;
};

inline bool intersects(const BBox& b, const RectI& r) {
    return !intersect(b.rect(), r).empty();
}

inline double center_distance(const BBox& a, const BBox& b) {
    const double dx = a.cx() - b.cx();
    const double dy = a.cy() - b.cy();
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace railsight
