#pragma once

#include <cstdint>
#include <vector>

#include "clustersim/lattice.hpp"
#include "clustersim/rng.hpp"

namespace clustersim {

enum class NoiseKind : uint8_t { DephasingZ, DepolarizingBcc };

const char* to_string(NoiseKind k);

// Local noise acting on the error-support edges of a sector. For the
// depolarizing channel on the bcc-reduced lattice, X errors are absorbed in
// the X measurements and Y errors act like Z errors, so the effective
// Z-rate is 2p'/3.
struct NoiseModel {
  NoiseKind kind = NoiseKind::DephasingZ;
  double rate = 0.0;

  double z_rate() const {
    return kind == NoiseKind::DephasingZ ? rate : 2.0 * rate / 3.0;
  }
};

// p = 1 / (1 + exp(delta / T)). Throws std::domain_error on nonpositive
// inputs.
double error_rate_from_temperature(double temperature, double delta);

// Exact inverse: T = delta / ln((1-p)/p), for p in (0, 1/2).
double temperature_from_error_rate(double p, double delta);

// Edge subset of a sector graph; excluded edges are never set.
struct ErrorChain {
  std::vector<int> edges;  // sorted, unique edge ids
};

// Each eligible edge is included independently with the model's effective
// Z-rate. Pure function of (key, graph, model): the per-edge draw is
// key.uniform(edge id).
ErrorChain sample_error_chain(const SectorGraph& graph, const NoiseModel& model,
                              StreamKey key);
void sample_error_chain(const SectorGraph& graph, const NoiseModel& model,
                        StreamKey key, ErrorChain& out);

}  // namespace clustersim
