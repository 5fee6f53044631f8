#include "rssloc/optim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rssloc {

namespace {

bool is_finite(double v) { return std::isfinite(v); }

double clamp(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

}  // namespace

void BoxSpec::validate() const {
  for (const Dimension& d : dims) {
    if (!(d.lower < d.upper)) {
      throw std::invalid_argument("BoxSpec: lower bound must be < upper bound");
    }
    if (d.transform == Transform::Log && !std::isfinite(d.lower)) {
      throw std::invalid_argument("BoxSpec: log transform needs a finite lower bound");
    }
    if (d.transform == Transform::Log && std::isfinite(d.upper)) {
      throw std::invalid_argument("BoxSpec: log transform is one-sided; use logit for intervals");
    }
    if (d.transform == Transform::Logit &&
        (!std::isfinite(d.lower) || !std::isfinite(d.upper))) {
      throw std::invalid_argument("BoxSpec: logit transform needs finite bounds");
    }
  }
}

double BoxSpec::to_unconstrained(double x, std::size_t dim) const {
  const Dimension& d = dims[dim];
  switch (d.transform) {
    case Transform::Identity:
      return x;
    case Transform::Log: {
      const double rel = std::max(x - d.lower, 1e-300);
      return std::log(rel);
    }
    case Transform::Logit: {
      const double span = d.upper - d.lower;
      double t = (x - d.lower) / span;
      t = clamp(t, 1e-12, 1.0 - 1e-12);
      return std::log(t / (1.0 - t));
    }
  }
  return x;
}

double BoxSpec::to_box(double y, std::size_t dim) const {
  const Dimension& d = dims[dim];
  switch (d.transform) {
    case Transform::Identity:
      return clamp(y, d.lower, d.upper);
    case Transform::Log:
      return d.lower + std::exp(y);
    case Transform::Logit: {
      const double t = 1.0 / (1.0 + std::exp(-y));
      return d.lower + (d.upper - d.lower) * t;
    }
  }
  return y;
}

std::vector<double> BoxSpec::to_unconstrained(const std::vector<double>& x) const {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = to_unconstrained(x[i], i);
  return y;
}

std::vector<double> BoxSpec::to_box(const std::vector<double>& y) const {
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = to_box(y[i], i);
  return x;
}

bool BoxSpec::contains(const std::vector<double>& x) const {
  if (x.size() != dims.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < dims[i].lower || x[i] > dims[i].upper) return false;
  }
  return true;
}

void OptimizerConfig::validate() const {
  if (multistart_seeds <= 0 || max_iterations <= 0) {
    throw std::invalid_argument("OptimizerConfig: counts must be positive");
  }
  if (!(function_tolerance > 0.0 && function_tolerance < 1.0) ||
      !(parameter_tolerance > 0.0 && parameter_tolerance < 1.0)) {
    throw std::invalid_argument("OptimizerConfig: tolerances must be in (0, 1)");
  }
  if (grid_refinement_factor <= 1.0) {
    throw std::invalid_argument("OptimizerConfig: refinement factor must exceed 1");
  }
}

namespace {

struct NmResult {
  std::vector<double> z;
  double value = std::numeric_limits<double>::infinity();
  long evaluations = 0;
};

// Classic Nelder-Mead on unconstrained coordinates. Non-finite trial values
// are treated as +inf so the simplex backs away from them.
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double> z0, double f0, long max_evals,
                     double ftol, double xtol) {
  const std::size_t n = z0.size();
  NmResult out;
  if (n == 0) {
    out.z = std::move(z0);
    out.value = f0;
    return out;
  }

  const double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const double kInitStep = 0.5;

  std::vector<std::vector<double>> simplex(n + 1, z0);
  std::vector<double> fv(n + 1);
  long evals = 0;

  auto eval = [&](const std::vector<double>& z) {
    ++evals;
    const double v = f(z);
    return is_finite(v) ? v : std::numeric_limits<double>::infinity();
  };

  fv[0] = f0;
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += kInitStep;
    fv[i + 1] = eval(simplex[i + 1]);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  while (evals < max_evals) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

    const std::size_t best = order[0], worst = order[n], second = order[n - 1];

    const double spread = fv[worst] - fv[best];
    if (is_finite(fv[worst]) &&
        spread <= ftol * (std::abs(fv[best]) + ftol)) {
      double diam = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        diam = std::max(diam,
                        std::abs(simplex[worst][i] - simplex[best][i]));
      }
      if (diam <= xtol) break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d];
    }
    for (std::size_t d = 0; d < n; ++d) centroid[d] /= static_cast<double>(n);

    for (std::size_t d = 0; d < n; ++d) {
      trial[d] = centroid[d] + kReflect * (centroid[d] - simplex[worst][d]);
    }
    const double f_reflect = eval(trial);

    if (f_reflect < fv[best]) {
      for (std::size_t d = 0; d < n; ++d) {
        trial2[d] = centroid[d] + kExpand * (trial[d] - centroid[d]);
      }
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        fv[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        fv[worst] = f_reflect;
      }
    } else if (f_reflect < fv[second]) {
      simplex[worst] = trial;
      fv[worst] = f_reflect;
    } else {
      const bool outside = f_reflect < fv[worst];
      if (outside) {
        for (std::size_t d = 0; d < n; ++d) {
          trial2[d] = centroid[d] + kContract * (trial[d] - centroid[d]);
        }
      } else {
        for (std::size_t d = 0; d < n; ++d) {
          trial2[d] = centroid[d] - kContract * (centroid[d] - simplex[worst][d]);
        }
      }
      const double f_contract = eval(trial2);
      if (f_contract < std::min(f_reflect, fv[worst])) {
        simplex[worst] = trial2;
        fv[worst] = f_contract;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t d = 0; d < n; ++d) {
            simplex[i][d] =
                simplex[best][d] + kShrink * (simplex[i][d] - simplex[best][d]);
          }
          fv[i] = eval(simplex[i]);
          if (evals >= max_evals) break;
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (fv[i] < fv[best]) best = i;
  }
  out.z = simplex[best];
  out.value = fv[best];
  out.evaluations = evals;
  return out;
}

}  // namespace

MinimizeResult minimize(const Objective& objective, const BoxSpec& box,
                        const std::vector<std::vector<double>>& seeds,
                        const OptimizerConfig& config) {
  box.validate();
  config.validate();
  if (seeds.empty()) throw std::invalid_argument("minimize: no seeds given");
  for (const auto& s : seeds) {
    if (s.size() != box.size()) {
      throw std::invalid_argument("minimize: seed dimension mismatch");
    }
    if (!box.contains(s)) {
      throw std::invalid_argument("minimize: seed outside box");
    }
  }

  const std::size_t n = box.size();
  auto f_z = [&](const std::vector<double>& z) {
    return objective(box.to_box(z));
  };

  MinimizeResult result;
  const long polish_evals = static_cast<long>(config.max_iterations) *
                            static_cast<long>(std::max<std::size_t>(n, 1));
  // Cheap pass from every seed, full-budget polish from the best survivor.
  const long scout_evals = std::max<long>(polish_evals / 4, 40 * static_cast<long>(n) + 40);

  NmResult best;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    std::vector<double> z0 = box.to_unconstrained(seeds[s]);
    const double f0 = objective(box.to_box(z0));
    if (!is_finite(f0)) {
      ++result.seeds_skipped;
      continue;
    }
    NmResult r = nelder_mead(f_z, std::move(z0), f0, scout_evals,
                             config.function_tolerance,
                             config.parameter_tolerance);
    result.evaluations += r.evaluations + 1;
    if (r.value < best.value || result.best_seed < 0) {
      best = std::move(r);
      result.best_seed = static_cast<int>(s);
    }
  }
  if (result.best_seed < 0) {
    throw std::runtime_error("minimize: objective non-finite at every seed");
  }

  NmResult polished = nelder_mead(f_z, best.z, best.value, polish_evals,
                                  config.function_tolerance,
                                  config.parameter_tolerance);
  result.evaluations += polished.evaluations;
  const NmResult& final_r = polished.value <= best.value ? polished : best;
  result.argmin = box.to_box(final_r.z);
  result.value = final_r.value;
  return result;
}

GridSearchResult grid_search_2d(const Objective2d& objective, const Box2d& box,
                                double resolution, int refinement_passes,
                                double refinement_factor) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("grid_search_2d: resolution must be positive");
  }
  if (!(box.x_lo <= box.x_hi && box.y_lo <= box.y_hi)) {
    throw std::invalid_argument("grid_search_2d: malformed box");
  }

  GridSearchResult result;
  bool have_incumbent = false;

  auto scan = [&](double x_lo, double x_hi, double y_lo, double y_hi,
                  double step) {
    x_lo = clamp(x_lo, box.x_lo, box.x_hi);
    x_hi = clamp(x_hi, box.x_lo, box.x_hi);
    y_lo = clamp(y_lo, box.y_lo, box.y_hi);
    y_hi = clamp(y_hi, box.y_lo, box.y_hi);
    const long nx = static_cast<long>(std::floor((x_hi - x_lo) / step + 1e-9));
    const long ny = static_cast<long>(std::floor((y_hi - y_lo) / step + 1e-9));
    for (long ix = 0; ix <= nx; ++ix) {
      const double x = x_lo + static_cast<double>(ix) * step;
      for (long iy = 0; iy <= ny; ++iy) {
        const double y = y_lo + static_cast<double>(iy) * step;
        const double v = objective({x, y});
        ++result.evaluations;
        if (!is_finite(v)) continue;
        if (!have_incumbent || v < result.value) {
          have_incumbent = true;
          result.value = v;
          result.argmin = {x, y};
        }
      }
    }
  };

  scan(box.x_lo, box.x_hi, box.y_lo, box.y_hi, resolution);
  if (!have_incumbent) {
    throw std::runtime_error("grid_search_2d: objective non-finite on the whole lattice");
  }

  double step = resolution;
  for (int pass = 0; pass < refinement_passes; ++pass) {
    const double window = step;
    step /= refinement_factor;
    scan(result.argmin.x - window, result.argmin.x + window,
         result.argmin.y - window, result.argmin.y + window, step);
  }
  return result;
}

}  // namespace rssloc
