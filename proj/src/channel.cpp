#include "rssloc/channel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rssloc {

void ChannelParams::validate() const {
  if (!(los.alpha > 0.0) || !(nlos.alpha > 0.0)) {
    throw std::invalid_argument("ChannelParams: path loss exponents must be > 0");
  }
  if (!(nlos.variance > los.variance) || !(los.variance > 0.0)) {
    throw std::invalid_argument("ChannelParams: need var_nlos > var_los > 0");
  }
}

void NoiseModel::validate() const {
  if ((los == NoiseKind::StudentT || nlos == NoiseKind::StudentT) &&
      !(nu > 2.0)) {
    throw std::invalid_argument("NoiseModel: Student-t needs nu > 2");
  }
}

double mean_rss(const ChannelParams& params, LinkMode mode, Point x_from,
                Point x_to) {
  const ModeParams& mp = params.mode(mode);
  return mp.p0_dbm - mp.alpha * log_distance_db(x_from, x_to);
}

namespace {

double draw_noise(NoiseKind kind, double variance, double nu,
                  std::mt19937_64& rng) {
  const double sigma = std::sqrt(variance);
  if (kind == NoiseKind::Gaussian) {
    std::normal_distribution<double> n(0.0, sigma);
    return n(rng);
  }
  // Student-t rescaled to the requested variance: Var[t_nu] = nu/(nu-2).
  std::student_t_distribution<double> t(nu);
  return t(rng) * sigma * std::sqrt((nu - 2.0) / nu);
}

}  // namespace

LinkMeasurement sample_link(const ChannelParams& params, LinkMode mode,
                            Point x_from, Point x_to, int from, int to,
                            int samples_per_link, const NoiseModel& noise,
                            std::mt19937_64& rng) {
  if (samples_per_link < 1) {
    throw std::invalid_argument("sample_link: need at least one sample");
  }
  noise.validate();
  const double mu = mean_rss(params, mode, x_from, x_to);
  const double variance = params.mode(mode).variance;
  const NoiseKind kind = noise.kind(mode);

  LinkMeasurement m;
  m.from = from;
  m.to = to;
  m.mode = mode;
  m.samples.resize(static_cast<std::size_t>(samples_per_link));
  for (double& s : m.samples) {
    s = mu + draw_noise(kind, variance, noise.nu, rng);
  }
  m.average = time_average(m.samples);
  return m;
}

double time_average(const std::vector<double>& samples) {
  if (samples.empty()) {
    throw std::invalid_argument("time_average: empty sample set");
  }
  const double sum = std::accumulate(samples.begin(), samples.end(), 0.0);
  return sum / static_cast<double>(samples.size());
}

double gaussian_log_pdf(double x, double mean, double variance) {
  const double r = x - mean;
  return -0.5 * std::log(2.0 * M_PI * variance) - r * r / (2.0 * variance);
}

double mixture_log_pdf_mu(double r_avg, double mu_los, double mu_nlos,
                          double lambda, double var_los, double var_nlos,
                          int samples_per_link) {
  if (!std::isfinite(r_avg)) {
    throw std::invalid_argument("mixture_log_pdf: non-finite measure");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("mixture_log_pdf: lambda outside [0, 1]");
  }
  const double k = static_cast<double>(samples_per_link);
  const double a = lambda > 0.0
                       ? std::log(lambda) +
                             gaussian_log_pdf(r_avg, mu_los, var_los / k)
                       : -std::numeric_limits<double>::infinity();
  const double b = lambda < 1.0
                       ? std::log1p(-lambda) +
                             gaussian_log_pdf(r_avg, mu_nlos, var_nlos / k)
                       : -std::numeric_limits<double>::infinity();
  const double hi = std::max(a, b);
  if (!std::isfinite(hi)) return hi;
  return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
}

double mixture_log_pdf(double r_avg, Point x_from, Point x_to, double lambda,
                       const ChannelParams& params, int samples_per_link) {
  if (samples_per_link < 1) {
    throw std::invalid_argument("mixture_log_pdf: need at least one sample");
  }
  const double mu_los = mean_rss(params, LinkMode::Los, x_from, x_to);
  const double mu_nlos = mean_rss(params, LinkMode::Nlos, x_from, x_to);
  return mixture_log_pdf_mu(r_avg, mu_los, mu_nlos, lambda, params.los.variance,
                            params.nlos.variance, samples_per_link);
}

}  // namespace rssloc
