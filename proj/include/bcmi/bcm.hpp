#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bcmi/rng.hpp"

namespace bcmi {

/// Observation aggregation level: per-pair interaction indicators,
/// per-agent interaction counts, or the total interaction count.
enum class Granularity { edge, node, global };

const char* to_string(Granularity g);
Granularity granularity_from_string(const std::string& s);

/// Number of unordered agent pairs, E = N(N-1)/2.
std::size_t edge_count(int n_agents);

/// Flat index of pair (i, j), i < j, in lexicographic order.
std::size_t edge_index(int i, int j, int n_agents);

/// Full simulation configuration for one trajectory.
struct ModelParams {
  double epsilon = 0.2;      // confidence bound, (0, 1]
  double mu = 1e-4;          // convergence rate, [0, 0.5]
  int n_agents = 100;        // N >= 2
  double noise_sigma = 0.0;  // per-step opinion noise std; 0 = deterministic
  int horizon = 1000;        // total steps T
  std::uint64_t seed = 0;    // master seed; substreams derived per use

  void validate() const;  // throws std::invalid_argument naming the field
};

/// Opinions of all N agents at one time step.
struct OpinionState {
  std::vector<double> opinions;
  int time = 0;
};

/// Binary interaction indicators over unordered pairs (i < j) at one step.
struct EdgeObservation {
  std::vector<std::uint8_t> indicators;  // length N(N-1)/2
  int time = 0;
};

/// Per-step observation vectors at a single granularity.
/// Edge entries are 0/1, node entries are integer counts, global is one
/// count; all are stored as doubles since the filters treat them as
/// real-valued anyway.
struct ObservationSeries {
  Granularity granularity = Granularity::edge;
  std::vector<std::vector<double>> values;  // values[t]: length E / N / 1

  int steps() const { return static_cast<int>(values.size()); }
};

/// A full simulated history: states for t = 0..T plus observations at all
/// three granularities for every step.
struct Trajectory {
  std::vector<OpinionState> states;
  std::vector<std::vector<std::uint8_t>> edges;  // per step, length E
  std::vector<std::vector<int>> nodes;           // per step, length N
  std::vector<int> globals;                      // per step
  ModelParams params;

  int horizon() const { return static_cast<int>(states.size()) - 1; }

  /// Observation vectors for steps 0..t_last at one granularity.
  ObservationSeries series(Granularity g, int t_last) const;
};

// --- dynamics -------------------------------------------------------------

/// Agents within `epsilon` of `agent`'s opinion, self included. Membership
/// is symmetric and boundary ties (distance exactly epsilon) count.
std::vector<int> confidence_set(const OpinionState& state, int agent, double epsilon);

/// One synchronous update of every opinion under the hard interaction
/// threshold:  x_i' = x_i + mu * sum_{j: |x_i-x_j| <= eps} (x_j - x_i).
/// Optionally records the interacting pairs (i < j) and the per-agent
/// neighbour count (self included). Every simulation path in the project
/// funnels through this kernel, so the scalar simulator and the tensorized
/// rollout agree bit for bit.
std::vector<double> step_kernel(const std::vector<double>& x, double epsilon, double mu,
                                std::vector<std::pair<int, int>>* pairs = nullptr,
                                std::vector<double>* neighbour_counts = nullptr);

/// One model step: deterministic update, then N(0, sigma^2) noise per agent
/// when noise_sigma > 0, then clamping to [0, 1]. The deterministic path
/// (sigma == 0) adds no noise and does not clamp.
OpinionState step(const OpinionState& state, const ModelParams& params, Rng& noise);

/// Roll the model forward `params.horizon` steps from x0, recording states
/// and all three observation granularities at every step. Reproducible
/// from params.seed: the noise stream is a fixed substream of the seed, so
/// extending the horizon never changes earlier draws.
Trajectory simulate(const OpinionState& x0, const ModelParams& params);

// --- observation operator --------------------------------------------------

std::vector<std::uint8_t> edge_indicators(const std::vector<double>& x, double epsilon);
std::vector<int> node_counts(const std::vector<std::uint8_t>& edges, int n_agents);
int global_count(const std::vector<int>& nodes);

/// h(x): edge -> 0/1 vector over pairs i<j; node -> per-agent interaction
/// counts (self excluded); global -> total interaction count.
std::vector<double> observe(const OpinionState& state, double epsilon, Granularity g);

/// Uniform initial opinions on [0, 1)^N.
OpinionState random_initial_state(int n_agents, Rng& rng);

// Substream tags hung off ModelParams.seed.
inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kNoiseStream = 2;

}  // namespace bcmi
