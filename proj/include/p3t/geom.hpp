#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p3t {

// Coordinates are bounded so that every orientation determinant fits in a
// signed 128-bit intermediate without rounding.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

using Triangle = std::array<Point, 3>;
using Segment = std::pair<Point, Point>;

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool within_bounds(Point p);

/// Sign of (q - p) x (r - p). Positive means p, q, r turn counterclockwise.
/// Throws GeometryError if a coordinate exceeds kCoordLimit.
Sign orient(Point p, Point q, Point r);

/// Open interior test; boundary points are not inside.
/// Throws GeometryError on a degenerate triangle.
bool strictly_inside(Point p, const Triangle& t);

/// The three extreme points in counterclockwise order when the convex hull
/// is a triangle, starting from the lexicographically smallest point.
std::optional<Triangle> hull_triangle(std::span<const Point> points);

bool general_position(std::span<const Point> points);

/// True iff the closed segments meet somewhere other than a shared endpoint.
/// Collinear overlap counts as a crossing.
bool segments_cross(const Segment& s1, const Segment& s2);

std::string to_string(Point p);

/// Distinct points; the general-position flag is computed, not trusted.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  /// Throws GeometryError unless the points are in general position.
  static PointSet require_general_position(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  bool is_general_position() const { return general_position_; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Point> points_;
  bool general_position_ = true;
};

}  // namespace p3t
