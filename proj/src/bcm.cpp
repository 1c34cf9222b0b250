#include "bcmi/bcm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcmi {

const char* to_string(Granularity g) {
  switch (g) {
    case Granularity::edge: return "edge";
    case Granularity::node: return "node";
    case Granularity::global: return "global";
  }
  return "?";
}

Granularity granularity_from_string(const std::string& s) {
  if (s == "edge") return Granularity::edge;
  if (s == "node") return Granularity::node;
  if (s == "global") return Granularity::global;
  throw std::invalid_argument("unknown granularity: " + s);
}

std::size_t edge_count(int n_agents) {
  return static_cast<std::size_t>(n_agents) * (n_agents - 1) / 2;
}

std::size_t edge_index(int i, int j, int n_agents) {
  // pairs (0,1), (0,2), ..., (0,N-1), (1,2), ...
  const std::size_t n = static_cast<std::size_t>(n_agents);
  const std::size_t a = static_cast<std::size_t>(i);
  return a * n - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

void ModelParams::validate() const {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("ModelParams.epsilon must be in (0, 1]");
  if (!(mu >= 0.0 && mu <= 0.5))
    throw std::invalid_argument("ModelParams.mu must be in [0, 0.5]");
  if (n_agents < 2) throw std::invalid_argument("ModelParams.n_agents must be >= 2");
  if (!(noise_sigma >= 0.0))
    throw std::invalid_argument("ModelParams.noise_sigma must be >= 0");
  if (horizon < 0) throw std::invalid_argument("ModelParams.horizon must be >= 0");
}

std::vector<int> confidence_set(const OpinionState& state, int agent, double epsilon) {
  const auto& x = state.opinions;
  if (agent < 0 || agent >= static_cast<int>(x.size()))
    throw std::out_of_range("confidence_set: agent index out of range");
  std::vector<int> members;
  const double xi = x[static_cast<std::size_t>(agent)];
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (std::abs(xi - x[static_cast<std::size_t>(j)]) <= epsilon) members.push_back(j);
  }
  return members;
}

std::vector<double> step_kernel(const std::vector<double>& x, double epsilon, double mu,
                                std::vector<std::pair<int, int>>* pairs,
                                std::vector<double>* neighbour_counts) {
  const int n = static_cast<int>(x.size());
  std::vector<double> next(static_cast<std::size_t>(n));
  if (pairs) pairs->clear();
  if (neighbour_counts) neighbour_counts->assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    double pull = 0.0;
    int count = 0;
    for (int j = 0; j < n; ++j) {
      const double xj = x[static_cast<std::size_t>(j)];
      if (std::abs(xi - xj) <= epsilon) {
        pull += xj - xi;  // j == i contributes an exact 0
        ++count;
        if (pairs && j > i) pairs->emplace_back(i, j);
      }
    }
    next[static_cast<std::size_t>(i)] = xi + mu * pull;
    if (neighbour_counts) (*neighbour_counts)[static_cast<std::size_t>(i)] = count;
  }
  return next;
}

OpinionState step(const OpinionState& state, const ModelParams& params, Rng& noise) {
  OpinionState out;
  out.opinions = step_kernel(state.opinions, params.epsilon, params.mu);
  out.time = state.time + 1;
  if (params.noise_sigma > 0.0) {
    for (double& v : out.opinions) {
      v += noise.normal(0.0, params.noise_sigma);
      v = std::clamp(v, 0.0, 1.0);
    }
  }
  return out;
}

std::vector<std::uint8_t> edge_indicators(const std::vector<double>& x, double epsilon) {
  const int n = static_cast<int>(x.size());
  std::vector<std::uint8_t> out(edge_count(n));
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      out[p++] = std::abs(xi - x[static_cast<std::size_t>(j)]) <= epsilon ? 1 : 0;
    }
  }
  return out;
}

std::vector<int> node_counts(const std::vector<std::uint8_t>& edges, int n_agents) {
  std::vector<int> counts(static_cast<std::size_t>(n_agents), 0);
  std::size_t p = 0;
  for (int i = 0; i < n_agents; ++i) {
    for (int j = i + 1; j < n_agents; ++j, ++p) {
      if (edges[p]) {
        ++counts[static_cast<std::size_t>(i)];
        ++counts[static_cast<std::size_t>(j)];
      }
    }
  }
  return counts;
}

int global_count(const std::vector<int>& nodes) {
  long long sum = 0;
  for (int c : nodes) sum += c;
  return static_cast<int>(sum / 2);
}

std::vector<double> observe(const OpinionState& state, double epsilon, Granularity g) {
  const auto edges = edge_indicators(state.opinions, epsilon);
  switch (g) {
    case Granularity::edge:
      return std::vector<double>(edges.begin(), edges.end());
    case Granularity::node: {
      const auto counts = node_counts(edges, static_cast<int>(state.opinions.size()));
      return std::vector<double>(counts.begin(), counts.end());
    }
    case Granularity::global: {
      const auto counts = node_counts(edges, static_cast<int>(state.opinions.size()));
      return {static_cast<double>(global_count(counts))};
    }
  }
  throw std::logic_error("observe: unreachable");
}

namespace {

void record_observations(Trajectory& traj, const OpinionState& state) {
  auto e = edge_indicators(state.opinions, traj.params.epsilon);
  auto n = node_counts(e, traj.params.n_agents);
  traj.globals.push_back(global_count(n));
  traj.edges.push_back(std::move(e));
  traj.nodes.push_back(std::move(n));
}

}  // namespace

Trajectory simulate(const OpinionState& x0, const ModelParams& params) {
  params.validate();
  if (static_cast<int>(x0.opinions.size()) != params.n_agents)
    throw std::invalid_argument("simulate: x0 length does not match n_agents");
  for (double v : x0.opinions) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("simulate: x0 entries must lie in [0, 1]");
  }

  Trajectory traj;
  traj.params = params;
  traj.states.reserve(static_cast<std::size_t>(params.horizon) + 1);

  Rng noise = Rng::substream(params.seed, kNoiseStream);
  OpinionState state = x0;
  state.time = 0;
  traj.states.push_back(state);
  record_observations(traj, state);
  for (int t = 1; t <= params.horizon; ++t) {
    state = step(state, params, noise);
    traj.states.push_back(state);
    record_observations(traj, state);
  }
  return traj;
}

ObservationSeries Trajectory::series(Granularity g, int t_last) const {
  if (t_last < 0 || t_last > horizon())
    throw std::out_of_range("Trajectory::series: t_last outside recorded range");
  ObservationSeries out;
  out.granularity = g;
  out.values.reserve(static_cast<std::size_t>(t_last) + 1);
  for (int t = 0; t <= t_last; ++t) {
    const auto ts = static_cast<std::size_t>(t);
    switch (g) {
      case Granularity::edge:
        out.values.emplace_back(edges[ts].begin(), edges[ts].end());
        break;
      case Granularity::node:
        out.values.emplace_back(nodes[ts].begin(), nodes[ts].end());
        break;
      case Granularity::global:
        out.values.push_back({static_cast<double>(globals[ts])});
        break;
    }
  }
  return out;
}

OpinionState random_initial_state(int n_agents, Rng& rng) {
  OpinionState s;
  s.opinions.resize(static_cast<std::size_t>(n_agents));
  for (double& v : s.opinions) v = rng.uniform01();
  s.time = 0;
  return s;
}

}  // namespace bcmi
