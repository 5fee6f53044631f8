#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rssloc/channel.hpp"
#include "rssloc/graph.hpp"
#include "rssloc/optim.hpp"

namespace rssloc {

enum class EstimateStatus { Unlocalized, SelfLocalized, Updated };

struct NodeEstimate {
  int node = -1;
  Point position{};
  double lambda = 0.5;
  double zeta = 0.5;
  ChannelParams eta;
  EstimateStatus status = EstimateStatus::Unlocalized;
  int updated_round = -1;  // round of the last solve; 0 = self-localization
  double objective = 0.0;  // attained local log-likelihood
  bool lambda_identified = false;
  bool zeta_identified = false;

  bool localized() const { return status != EstimateStatus::Unlocalized; }
};

struct AnchorMeasure {
  Point anchor;
  double r_avg = 0.0;  // dBm
};

struct AgentMeasure {
  int neighbor = -1;
  Point est_position{};  // broadcast estimate of the neighbor
  double r_avg = 0.0;
};

// Everything one node sees: anchor-link averages with known anchor positions,
// agent-link averages with the neighbors' estimated positions.
struct LocalInformation {
  std::vector<AnchorMeasure> anchors;
  std::vector<AgentMeasure> agents;

  bool empty() const { return anchors.empty() && agents.empty(); }
};

struct RobustConfig {
  Box2d search_box{0.0, 100.0, 0.0, 100.0};
  OptimizerConfig optimizer{};
  int position_grid = 5;      // multistart lattice per axis
  double mix_epsilon = 1e-4;  // mixing coefficients live in [eps, 1-eps]
  double p0_lo = -80.0;       // reference power search interval (dBm)
  double p0_hi = 40.0;
  double variance_floor = 1e-13;
  // Neutral starts, centered on the generation ranges.
  ChannelParams eta_init{{-15.0, 3.0, 50.0}, {0.0, 4.5, 150.0}};
};

// Sum of per-link mixture log-densities: anchor links weighted by lambda,
// agent links by zeta, all sharing eta and K.
double local_log_likelihood(Point x, double lambda, double zeta,
                            const ChannelParams& eta,
                            const LocalInformation& info, int samples_per_link);

// Anchor-only robust MLE over (x, lambda, eta); needs >= 3 anchor measures.
// zeta is pinned at 0.5 and left unidentified.
NodeEstimate self_localize(const std::vector<AnchorMeasure>& anchor_info,
                           int samples_per_link, const RobustConfig& config);

// Joint maximization over (x, lambda, zeta, eta) with neighbor position
// estimates held fixed; needs anchors + known agent-neighbors >= 3. A mixing
// coefficient without links on its side is pinned at 0.5.
NodeEstimate rdml_update(int node, const LocalInformation& info,
                         int samples_per_link, const RobustConfig& config,
                         int round = -1,
                         const NodeEstimate* current = nullptr);

// Thrown when the distributed schemes are asked to run on a graph that the
// coloring test rejects.
class IncompatibleNetworkError : public std::runtime_error {
 public:
  IncompatibleNetworkError(std::string message, std::vector<int> white_agents)
      : std::runtime_error(std::move(message)),
        stalled_agents(std::move(white_agents)) {}

  std::vector<int> stalled_agents;
};

// One solve event in a distributed run. broadcast_dim is nonzero only when
// the node got its first position this round and pushed it out.
struct RoundLogEntry {
  int round = 0;
  int node = -1;
  double objective = 0.0;
  int broadcast_dim = 0;
  int receivers = 0;
};

struct RdmlResult {
  std::vector<NodeEstimate> estimates;  // per agent
  std::vector<RoundLogEntry> round_log;
  CompatibilityReport compatibility;
  int iterative_rounds = 0;  // rounds after initialization that did work
};

// Synchronous simulation of the distributed robust scheme: round 0
// self-localizes every agent with >= 3 anchors and broadcasts; afterwards a
// node (re-)solves whenever its known-neighbor set grew, newly localized
// nodes broadcast once, and estimates swap between rounds. Refuses
// incompatible networks.
RdmlResult run_rdml(const DirectedNetwork& net, const MeasurementTable& meas,
                    const RobustConfig& config);

// Anchor-link local information for one agent, pulled out of a measurement
// table.
std::vector<AnchorMeasure> collect_anchor_measures(const DirectedNetwork& net,
                                                   const MeasurementTable& meas,
                                                   int node);

}  // namespace rssloc
