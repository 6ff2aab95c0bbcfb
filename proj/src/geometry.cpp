#include "rotinv/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace rotinv {

namespace {
constexpr double orientation_eps = 1e-12;
}

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.beta1 - o.beta1) * (b.beta2 - o.beta2) -
           (a.beta2 - o.beta2) * (b.beta1 - o.beta1);
}

double distance(const Point2& a, const Point2& b) {
    return std::hypot(a.beta1 - b.beta1, a.beta2 - b.beta2);
}

Hull2D convex_hull_2d(std::span<const Point2> points) {
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.beta1 != b.beta1 ? a.beta1 < b.beta1 : a.beta2 < b.beta2;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) {
                              return a.beta1 == b.beta1 && a.beta2 == b.beta2;
                          }),
              pts.end());

    Hull2D hull;
    if (pts.size() < 3) {
        hull.vertices = pts;
        hull.degenerate = true;
        return hull;
    }

    std::vector<Point2>& h = hull.vertices;
    h.reserve(2 * pts.size());
    // lower chain
    for (const Point2& p : pts) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h[h.size() - 1], p) <= orientation_eps)
            h.pop_back();
        h.push_back(p);
    }
    // upper chain
    const std::size_t lower = h.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (h.size() >= lower && cross(h[h.size() - 2], h[h.size() - 1], *it) <= orientation_eps)
            h.pop_back();
        h.push_back(*it);
    }
    h.pop_back();
    hull.degenerate = h.size() < 3;
    return hull;
}

double polygon_area(std::span<const Point2> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) return 0.0;
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        twice_area += a.beta1 * b.beta2 - b.beta1 * a.beta2;
    }
    return 0.5 * twice_area;
}

bool point_in_convex_polygon(const Point2& p, std::span<const Point2> polygon, double tol) {
    const std::size_t n = polygon.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = polygon[i];
        const Point2& b = polygon[(i + 1) % n];
        const double len = distance(a, b);
        if (len == 0.0) continue;
        if (cross(a, b, p) / len < -tol) return false;
    }
    return true;
}

std::vector<Point2> clip_convex_polygons(std::span<const Point2> subject,
                                         std::span<const Point2> clip) {
    std::vector<Point2> output(subject.begin(), subject.end());
    for (std::size_t i = 0; i < clip.size() && !output.empty(); ++i) {
        const Point2& ca = clip[i];
        const Point2& cb = clip[(i + 1) % clip.size()];
        std::vector<Point2> input = std::move(output);
        output.clear();

        const auto side = [&](const Point2& p) { return cross(ca, cb, p); };
        const auto intersect = [&](const Point2& p, const Point2& q) {
            const double dp = side(p), dq = side(q);
            const double t = dp / (dp - dq);
            return Point2{p.beta1 + t * (q.beta1 - p.beta1), p.beta2 + t * (q.beta2 - p.beta2)};
        };

        for (std::size_t k = 0; k < input.size(); ++k) {
            const Point2& cur = input[k];
            const Point2& nxt = input[(k + 1) % input.size()];
            const bool cur_in = side(cur) >= -orientation_eps;
            const bool nxt_in = side(nxt) >= -orientation_eps;
            if (cur_in) output.push_back(cur);
            if (cur_in != nxt_in) output.push_back(intersect(cur, nxt));
        }
    }
    return output;
}

}  // namespace rotinv
