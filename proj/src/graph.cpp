#include "rssloc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rssloc {

DirectedNetwork::DirectedNetwork(int num_anchors, int num_agents,
                                 std::vector<Point> anchor_positions)
    : num_anchors_(num_anchors),
      num_agents_(num_agents),
      anchor_positions_(std::move(anchor_positions)) {
  if (num_anchors_ < 0 || num_agents_ < 0 || num_nodes() <= 0) {
    throw std::invalid_argument("DirectedNetwork: bad node counts");
  }
  if (static_cast<int>(anchor_positions_.size()) != num_anchors_) {
    throw std::invalid_argument(
        "DirectedNetwork: anchor position count mismatch");
  }
  const std::size_t n = static_cast<std::size_t>(num_nodes());
  obs_.assign(n * n, 0);
  los_.assign(n * n, 1);
}

Point DirectedNetwork::anchor_position(int node) const {
  if (!is_anchor(node)) {
    throw std::invalid_argument("anchor_position: node is not an anchor");
  }
  return anchor_positions_[static_cast<std::size_t>(node - num_agents_)];
}

void DirectedNetwork::set_obs(int from, int to, bool value) {
  check_node(from);
  check_node(to);
  if (from == to && value) {
    throw std::invalid_argument("set_obs: a node does not self-measure");
  }
  obs_[idx(from, to)] = value ? 1 : 0;
}

void DirectedNetwork::set_los(int a, int b, bool value) {
  check_node(a);
  check_node(b);
  los_[idx(a, b)] = value ? 1 : 0;
  los_[idx(b, a)] = value ? 1 : 0;
}

void DirectedNetwork::check_node(int node) const {
  if (node < 0 || node >= num_nodes()) {
    throw std::invalid_argument("invalid node id");
  }
}

Neighborhoods neighborhoods(const DirectedNetwork& net, int node) {
  net.check_node(node);
  Neighborhoods nb;
  for (int j = 0; j < net.num_nodes(); ++j) {
    if (j == node || !net.obs(j, node)) continue;
    nb.all.push_back(j);
    if (net.is_anchor(j)) {
      nb.anchors.push_back(j);
    } else {
      nb.agents.push_back(j);
    }
  }
  return nb;
}

bool is_initializable(const DirectedNetwork& net) {
  for (int i = 0; i < net.num_agents(); ++i) {
    if (static_cast<int>(neighborhoods(net, i).anchors.size()) >= 3) {
      return true;
    }
  }
  return false;
}

CompatibilityReport compatibility_test(const DirectedNetwork& net) {
  const int nu = net.num_agents();
  CompatibilityReport report;
  report.initializable = is_initializable(net);
  report.coloring_order.assign(static_cast<std::size_t>(nu), -1);

  std::vector<int> anchor_in(static_cast<std::size_t>(nu), 0);
  std::vector<std::vector<int>> agent_in(static_cast<std::size_t>(nu));
  for (int i = 0; i < nu; ++i) {
    const Neighborhoods nb = neighborhoods(net, i);
    anchor_in[static_cast<std::size_t>(i)] = static_cast<int>(nb.anchors.size());
    agent_in[static_cast<std::size_t>(i)] = nb.agents;
  }

  ColoringState& st = report.state;
  st.black.assign(static_cast<std::size_t>(nu), false);
  st.hat_gamma_u.assign(static_cast<std::size_t>(nu), {});

  auto count_black = [&] {
    return static_cast<int>(
        std::count(st.black.begin(), st.black.end(), true));
  };
  auto refresh_hat_gamma = [&] {
    for (int i = 0; i < nu; ++i) {
      auto& hg = st.hat_gamma_u[static_cast<std::size_t>(i)];
      hg.clear();
      for (int j : agent_in[static_cast<std::size_t>(i)]) {
        if (st.black[static_cast<std::size_t>(j)]) hg.push_back(j);
      }
    }
  };

  // Initialization, k = 0.
  for (int i = 0; i < nu; ++i) {
    if (anchor_in[static_cast<std::size_t>(i)] >= 3) {
      st.black[static_cast<std::size_t>(i)] = true;
      report.coloring_order[static_cast<std::size_t>(i)] = 0;
    }
  }
  refresh_hat_gamma();
  st.b_u_size_history.push_back(count_black());
  if (st.b_u_size_history.back() == nu) {
    report.compatible = true;
    report.depth = 0;
    report.lifetime = 0;
    st.step = 0;
    return report;
  }

  // Coloring loop.
  int k = 1;
  while (true) {
    if (k > nu + 1) {
      throw std::logic_error(
          "compatibility_test: coloring exceeded num_agents + 1 iterations");
    }
    for (int i = 0; i < nu; ++i) {
      if (st.black[static_cast<std::size_t>(i)]) continue;
      const int references =
          anchor_in[static_cast<std::size_t>(i)] +
          static_cast<int>(st.hat_gamma_u[static_cast<std::size_t>(i)].size());
      if (references >= 3) {
        st.black[static_cast<std::size_t>(i)] = true;
        report.coloring_order[static_cast<std::size_t>(i)] = k;
      }
    }
    refresh_hat_gamma();
    const int c_prev = st.b_u_size_history.back();
    const int c_now = count_black();
    st.b_u_size_history.push_back(c_now);
    if (c_prev == c_now) {
      report.depth = k - 1;
      report.compatible = (c_now == nu);
      if (report.compatible) report.lifetime = report.depth;
      st.step = k;
      return report;
    }
    ++k;
  }
}

DirectedNetwork generate_geometric_network(
    const std::vector<Point>& anchor_positions,
    const std::vector<Point>& agent_positions, double radius,
    std::mt19937_64& rng, const EdgeDropSpec& drops) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("generate_geometric_network: radius must be > 0");
  }
  const int na = static_cast<int>(anchor_positions.size());
  const int nu = static_cast<int>(agent_positions.size());
  DirectedNetwork net(na, nu, anchor_positions);

  auto position = [&](int node) {
    return net.is_anchor(node)
               ? anchor_positions[static_cast<std::size_t>(node - nu)]
               : agent_positions[static_cast<std::size_t>(node)];
  };

  for (int from = 0; from < net.num_nodes(); ++from) {
    for (int to = 0; to < net.num_nodes(); ++to) {
      if (from == to) continue;
      if (distance(position(from), position(to)) <= radius) {
        net.set_obs(from, to, true);
      }
    }
  }

  if (drops.probability > 0.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int from = 0; from < net.num_nodes(); ++from) {
      for (int to = 0; to < net.num_nodes(); ++to) {
        if (from != to && net.obs(from, to) && u(rng) < drops.probability) {
          net.set_obs(from, to, false);
        }
      }
    }
  }
  for (auto [from, to] : drops.edges) {
    net.set_obs(from, to, false);
  }
  return net;
}

DirectedNetwork generate_complete_network(
    const std::vector<Point>& anchor_positions, int num_agents) {
  DirectedNetwork net(static_cast<int>(anchor_positions.size()), num_agents,
                      anchor_positions);
  for (int from = 0; from < net.num_nodes(); ++from) {
    for (int to = 0; to < net.num_nodes(); ++to) {
      if (from != to) net.set_obs(from, to, true);
    }
  }
  return net;
}

void generate_los_matrix(DirectedNetwork& net, double nlos_fraction,
                         std::mt19937_64& rng) {
  if (!(nlos_fraction >= 0.0 && nlos_fraction <= 1.0)) {
    throw std::invalid_argument("generate_los_matrix: fraction outside [0, 1]");
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int a = 0; a < net.num_nodes(); ++a) {
    net.set_los(a, a, true);
    for (int b = a + 1; b < net.num_nodes(); ++b) {
      net.set_los(a, b, u(rng) >= nlos_fraction);
    }
  }
}

}  // namespace rssloc
