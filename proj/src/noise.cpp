#include "clustersim/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace clustersim {

const char* to_string(NoiseKind k) {
  return k == NoiseKind::DephasingZ ? "z" : "depol-bcc";
}

double error_rate_from_temperature(double temperature, double delta) {
  if (!(temperature > 0.0) || !(delta > 0.0))
    throw std::domain_error("temperature and gap must be positive");
  return 1.0 / (1.0 + std::exp(delta / temperature));
}

double temperature_from_error_rate(double p, double delta) {
  if (!(p > 0.0) || !(p < 0.5))
    throw std::domain_error("error rate must lie in (0, 1/2)");
  if (!(delta > 0.0)) throw std::domain_error("gap must be positive");
  return delta / std::log((1.0 - p) / p);
}

void sample_error_chain(const SectorGraph& graph, const NoiseModel& model,
                        StreamKey key, ErrorChain& out) {
  out.edges.clear();
  const double rate = model.z_rate();
  if (rate <= 0.0) return;
  const int n = graph.edge_count();
  const auto& edges = graph.edges();
  for (int e = 0; e < n; ++e) {
    if (edges[e].excluded) continue;
    if (key.uniform(static_cast<uint64_t>(e)) < rate) out.edges.push_back(e);
  }
}

ErrorChain sample_error_chain(const SectorGraph& graph, const NoiseModel& model,
                              StreamKey key) {
  ErrorChain c;
  sample_error_chain(graph, model, key, c);
  return c;
}

}  // namespace clustersim
