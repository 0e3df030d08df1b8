#include "p3t/geom.hpp"

#include <algorithm>
#include <set>

namespace p3t {

namespace {

void check_bounds(Point p) {
  if (!within_bounds(p)) {
    throw GeometryError("coordinate out of bounds: " + to_string(p));
  }
}

Sign sign_of(__int128 v) {
  if (v > 0) return Sign::positive;
  if (v < 0) return Sign::negative;
  return Sign::zero;
}

}  // namespace

bool within_bounds(Point p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit &&
         p.y <= kCoordLimit;
}

Sign orient(Point p, Point q, Point r) {
  check_bounds(p);
  check_bounds(q);
  check_bounds(r);
  const __int128 det = static_cast<__int128>(q.x - p.x) * (r.y - p.y) -
                       static_cast<__int128>(q.y - p.y) * (r.x - p.x);
  return sign_of(det);
}

bool strictly_inside(Point p, const Triangle& t) {
  const Sign s = orient(t[0], t[1], t[2]);
  if (s == Sign::zero) {
    throw GeometryError("degenerate triangle");
  }
  return orient(t[0], t[1], p) == s && orient(t[1], t[2], p) == s &&
         orient(t[2], t[0], p) == s;
}

std::optional<Triangle> hull_triangle(std::span<const Point> points) {
  if (points.size() < 3) {
    throw GeometryError("hull_triangle needs at least 3 points");
  }
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw GeometryError("duplicate points");
  }

  // Andrew's monotone chain, strict turns only.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) != Sign::positive) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p) != Sign::positive) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);

  if (hull.size() < 3) {
    throw GeometryError("degenerate input: all points collinear");
  }
  if (hull.size() != 3) return std::nullopt;
  return Triangle{hull[0], hull[1], hull[2]};
}

bool general_position(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(points[i], points[j], points[k]) == Sign::zero) return false;
  return true;
}

bool segments_cross(const Segment& s1, const Segment& s2) {
  const auto [a, b] = s1;
  const auto [c, d] = s2;
  const int abc = static_cast<int>(orient(a, b, c));
  const int abd = static_cast<int>(orient(a, b, d));
  const bool shared = (a == c || a == d || b == c || b == d);

  if (abc == 0 && abd == 0) {
    // Collinear: lexicographic order is monotone along a line.
    const Point lo = std::max(std::min(a, b), std::min(c, d));
    const Point hi = std::min(std::max(a, b), std::max(c, d));
    if (hi < lo) return false;
    if (lo < hi) return true;
    return !shared;
  }

  const int cda = static_cast<int>(orient(c, d, a));
  const int cdb = static_cast<int>(orient(c, d, b));
  if (abc * abd > 0 || cda * cdb > 0) return false;
  // Not collinear, so the segments meet in exactly one point.
  return !shared;
}

std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::set<Point> seen;
  for (const Point& p : points_) {
    if (!within_bounds(p)) {
      throw GeometryError("coordinate out of bounds: " + to_string(p));
    }
    if (!seen.insert(p).second) {
      throw GeometryError("duplicate point " + to_string(p));
    }
  }
  general_position_ = general_position(points_);
}

PointSet PointSet::require_general_position(std::vector<Point> points) {
  PointSet set(std::move(points));
  if (!set.general_position_) {
    throw GeometryError("point set is not in general position");
  }
  return set;
}

}  // namespace p3t
