#pragma once

#include <random>
#include <vector>

#include "rssloc/geometry.hpp"

namespace rssloc {

enum class LinkMode { Los, Nlos };

// One propagation mode: reference power at 1 m (dBm), path loss exponent,
// and shadowing variance (dB^2).
struct ModeParams {
  double p0_dbm = 0.0;
  double alpha = 2.0;
  double variance = 1.0;
};

struct ChannelParams {
  ModeParams los;
  ModeParams nlos;

  const ModeParams& mode(LinkMode m) const {
    return m == LinkMode::Los ? los : nlos;
  }

  // Throws std::invalid_argument unless alphas are positive and
  // var_nlos > var_los > 0.
  void validate() const;
};

enum class NoiseKind { Gaussian, StudentT };

// Noise distribution per propagation mode. Student-t draws are rescaled so
// their variance matches the configured mode variance.
struct NoiseModel {
  NoiseKind los = NoiseKind::Gaussian;
  NoiseKind nlos = NoiseKind::Gaussian;
  double nu = 5.0;  // Student-t degrees of freedom, > 2

  NoiseKind kind(LinkMode m) const { return m == LinkMode::Los ? los : nlos; }
  void validate() const;
};

struct LinkMeasurement {
  int from = -1;
  int to = -1;
  LinkMode mode = LinkMode::Los;
  std::vector<double> samples;  // dBm
  double average = 0.0;         // dBm, arithmetic mean of samples
};

// Mean received power p0 - 10 alpha log10(d) with the distance clamped away
// from zero.
double mean_rss(const ChannelParams& params, LinkMode mode, Point x_from,
                Point x_to);

// Draws K noisy RSS samples for one link and their time average.
LinkMeasurement sample_link(const ChannelParams& params, LinkMode mode,
                            Point x_from, Point x_to, int from, int to,
                            int samples_per_link, const NoiseModel& noise,
                            std::mt19937_64& rng);

double time_average(const std::vector<double>& samples);

// Log of the two-component Gaussian mixture density of a time-averaged RSS
// measure: lambda * N(mu_los, var_los/K) + (1-lambda) * N(mu_nlos, var_nlos/K)
// evaluated via log-sum-exp. lambda may sit on the boundary {0, 1}, where the
// corresponding component drops out.
double mixture_log_pdf(double r_avg, Point x_from, Point x_to, double lambda,
                       const ChannelParams& params, int samples_per_link);

// Same mixture with precomputed component means (hot path for optimizers).
double mixture_log_pdf_mu(double r_avg, double mu_los, double mu_nlos,
                          double lambda, double var_los, double var_nlos,
                          int samples_per_link);

double gaussian_log_pdf(double x, double mean, double variance);

}  // namespace rssloc
