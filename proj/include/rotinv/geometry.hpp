#ifndef ROTINV_GEOMETRY_HPP
#define ROTINV_GEOMETRY_HPP

#include <span>
#include <vector>

namespace rotinv {

struct Point2 {
    double beta1 = 0.0;
    double beta2 = 0.0;
};

/// Cross product (a - o) x (b - o); positive for a counterclockwise turn.
double cross(const Point2& o, const Point2& a, const Point2& b);

double distance(const Point2& a, const Point2& b);

struct Hull2D {
    std::vector<Point2> vertices;  // counterclockwise
    bool degenerate = false;       // fewer than 3 points or collinear input
};

/// Monotone-chain convex hull; turns within 1e-12 count as collinear and are
/// dropped. Collinear input collapses to a flagged segment.
Hull2D convex_hull_2d(std::span<const Point2> points);

/// Signed area of a simple polygon; positive when counterclockwise.
double polygon_area(std::span<const Point2> vertices);

/// Membership in a convex counterclockwise polygon: accepted when the point
/// lies on the inner side of every edge within tol (in units of distance;
/// tol > 0 admits a boundary band, tol < 0 demands strict interior).
bool point_in_convex_polygon(const Point2& p, std::span<const Point2> polygon, double tol);

/// Intersection of two convex counterclockwise polygons (Sutherland-Hodgman).
std::vector<Point2> clip_convex_polygons(std::span<const Point2> subject,
                                         std::span<const Point2> clip);

}  // namespace rotinv

#endif  // ROTINV_GEOMETRY_HPP
