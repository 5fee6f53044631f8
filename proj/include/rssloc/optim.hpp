#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "rssloc/geometry.hpp"

namespace rssloc {

// Coordinate transform used to turn a bound constraint into an unconstrained
// search coordinate.
//
//   Identity : no reparameterization; finite bounds are enforced by clamping.
//   Log      : y = ln(x - lower), for one-sided positive parameters.
//   Logit    : y = ln((x - lower)/(upper - x)), for interval parameters.
enum class Transform { Identity, Log, Logit };

struct Dimension {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  Transform transform = Transform::Identity;
};

// Per-dimension bounds plus the transform that maps the feasible box to
// unconstrained coordinates.
struct BoxSpec {
  std::vector<Dimension> dims;

  std::size_t size() const { return dims.size(); }

  // Validates bounds/transform combinations; throws std::invalid_argument.
  void validate() const;

  double to_unconstrained(double x, std::size_t dim) const;
  double to_box(double y, std::size_t dim) const;

  std::vector<double> to_unconstrained(const std::vector<double>& x) const;
  std::vector<double> to_box(const std::vector<double>& y) const;

  bool contains(const std::vector<double>& x) const;

  static Dimension identity() { return Dimension{}; }
  static Dimension identity(double lo, double hi) {
    return Dimension{lo, hi, Transform::Identity};
  }
  static Dimension positive(double lo = 0.0) {
    return Dimension{lo, std::numeric_limits<double>::infinity(), Transform::Log};
  }
  static Dimension interval(double lo, double hi) {
    return Dimension{lo, hi, Transform::Logit};
  }
};

struct OptimizerConfig {
  int multistart_seeds = 26;     // used by callers when building seed lists
  int max_iterations = 400;      // per-dimension scaling applied internally
  double function_tolerance = 1e-10;
  double parameter_tolerance = 1e-9;
  double grid_refinement_factor = 10.0;

  void validate() const;
};

struct MinimizeResult {
  std::vector<double> argmin;  // in box coordinates
  double value = std::numeric_limits<double>::infinity();
  long evaluations = 0;
  int best_seed = -1;
  int seeds_skipped = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Derivative-free minimization: a Nelder-Mead simplex descent started from
// each seed (in transformed coordinates), followed by a polish run from the
// best terminal point. Deterministic for fixed inputs. Seeds where the
// objective is non-finite are skipped; if all are, throws std::runtime_error.
MinimizeResult minimize(const Objective& objective, const BoxSpec& box,
                        const std::vector<std::vector<double>>& seeds,
                        const OptimizerConfig& config);

struct Box2d {
  double x_lo = 0.0, x_hi = 0.0;
  double y_lo = 0.0, y_hi = 0.0;
};

struct GridSearchResult {
  Point argmin;
  double value = std::numeric_limits<double>::infinity();
  long evaluations = 0;
};

using Objective2d = std::function<double(Point)>;

// Exhaustive lattice evaluation followed by `refinement_passes` zooms around
// the incumbent, each shrinking the step by `refinement_factor`. Ties are
// broken toward the lowest x, then lowest y. Throws std::runtime_error when
// no finite value is found on the initial lattice.
GridSearchResult grid_search_2d(const Objective2d& objective, const Box2d& box,
                                double resolution, int refinement_passes,
                                double refinement_factor = 10.0);

}  // namespace rssloc
