#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rssloc/geometry.hpp"

namespace rssloc {

enum class NodeRole { Agent, Anchor };

// Nodes are indexed with agents first: ids [0, num_agents) are agents,
// [num_agents, num_nodes) are anchors.
struct NodeId {
  int index = -1;

  bool operator==(const NodeId&) const = default;
};

// Directed measurement graph. obs(j, i) == true means node i receives RSS
// measures from node j (edge j -> i); the diagonal is always false. The
// LoS/NLoS matrix is symmetric and independent of obs.
class DirectedNetwork {
 public:
  DirectedNetwork(int num_anchors, int num_agents,
                  std::vector<Point> anchor_positions);

  int num_anchors() const { return num_anchors_; }
  int num_agents() const { return num_agents_; }
  int num_nodes() const { return num_agents_ + num_anchors_; }

  bool is_agent(int node) const { return node >= 0 && node < num_agents_; }
  bool is_anchor(int node) const {
    return node >= num_agents_ && node < num_nodes();
  }

  // Position of anchor node `node` (node id, not anchor-local index).
  Point anchor_position(int node) const;
  const std::vector<Point>& anchor_positions() const { return anchor_positions_; }

  bool obs(int from, int to) const { return obs_[idx(from, to)] != 0; }
  void set_obs(int from, int to, bool value);

  bool los(int a, int b) const { return los_[idx(a, b)] != 0; }
  // Sets both (a, b) and (b, a); the LoS matrix stays symmetric.
  void set_los(int a, int b, bool value);

  void check_node(int node) const;

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(num_nodes()) +
           static_cast<std::size_t>(b);
  }

  int num_anchors_ = 0;
  int num_agents_ = 0;
  std::vector<Point> anchor_positions_;
  std::vector<std::uint8_t> obs_;
  std::vector<std::uint8_t> los_;
};

struct Neighborhoods {
  std::vector<int> all;      // Gamma(i)
  std::vector<int> anchors;  // Gamma_a(i)
  std::vector<int> agents;   // Gamma_u(i)
};

// Nodes from which `node` receives observables, split by role.
Neighborhoods neighborhoods(const DirectedNetwork& net, int node);

// True iff some agent receives from at least three anchors.
bool is_initializable(const DirectedNetwork& net);

// Trace of the iterative coloring pass.
struct ColoringState {
  std::vector<bool> black;                  // per agent
  int step = 0;                             // k
  std::vector<std::vector<int>> hat_gamma_u;  // per agent: black agent in-neighbors
  std::vector<int> b_u_size_history;        // |B_u^(k)| for k = 0, 1, ...
};

struct CompatibilityReport {
  bool initializable = false;
  bool compatible = false;         // flag f_G
  int depth = 0;                   // h_G, always finite
  std::optional<int> lifetime;     // n; empty when infinite
  std::vector<int> coloring_order;  // per agent: step turned black, -1 if never
  ColoringState state;
};

// Iterative coloring compatibility test. Agents with >= 3 anchor in-neighbors
// start black; each step colors agents whose anchor plus black-agent
// in-neighbors reach 3; stops when a step adds nobody. The loop cannot run
// more than num_agents + 1 times (every non-final step adds a black agent);
// exceeding that indicates a broken invariant and throws std::logic_error.
CompatibilityReport compatibility_test(const DirectedNetwork& net);

struct EdgeDropSpec {
  std::vector<std::pair<int, int>> edges;  // explicit (from, to) drops
  double probability = 0.0;                // independent per directed edge
};

// Disk-connectivity observation graph: obs(j, i) = 1 iff the separation is
// <= radius (inclusive) and j != i. Asymmetry is injected afterwards through
// the drop spec. The LoS matrix starts all-LoS.
DirectedNetwork generate_geometric_network(
    const std::vector<Point>& anchor_positions,
    const std::vector<Point>& agent_positions, double radius,
    std::mt19937_64& rng, const EdgeDropSpec& drops = {});

// Complete observation graph over the same node set.
DirectedNetwork generate_complete_network(
    const std::vector<Point>& anchor_positions, int num_agents);

// Redraws the LoS matrix: each unordered node pair is independently NLoS
// with probability nlos_fraction, mirrored to both directions; the diagonal
// stays LoS.
void generate_los_matrix(DirectedNetwork& net, double nlos_fraction,
                         std::mt19937_64& rng);

}  // namespace rssloc
