#pragma once

#include <cmath>

namespace rssloc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double norm(Point p) { return std::hypot(p.x, p.y); }

inline double distance(Point a, Point b) { return norm(a - b); }

// Minimum distance fed into log10 terms. Keeps objectives finite when an
// optimizer wanders onto a node position.
inline constexpr double kMinDistance = 1e-3;

inline double clamped_distance(Point a, Point b) {
  const double d = distance(a, b);
  return d < kMinDistance ? kMinDistance : d;
}

// 10*log10 of the (clamped) separation, the log-distance used by the
// path-loss model.
inline double log_distance_db(Point a, Point b) {
  return 10.0 * std::log10(clamped_distance(a, b));
}

}  // namespace rssloc
