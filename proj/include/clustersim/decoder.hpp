#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clustersim/blossom.hpp"
#include "clustersim/lattice.hpp"
#include "clustersim/noise.hpp"

namespace clustersim {

// Violated parity constraints: the boundary of the error chain.
struct Syndrome {
  std::vector<int> defects;  // sorted vertex ids
};

// Complete matching graph over defects. In planar mode every defect gets a
// virtual boundary twin; twins are mutually connected at weight 0.
struct MatchingProblem {
  int n_defects = 0;
  bool with_boundary = false;
  std::vector<int> defects;      // vertex ids
  std::vector<int64_t> weights;  // dense nodes() x nodes()

  int nodes() const { return with_boundary ? 2 * n_defects : n_defects; }
};

struct Correction {
  std::vector<int> edges;  // sorted, unique
};

struct DecodeOutcome {
  Correction correction;
  bool nontrivial = false;
  bool wrap1 = false, wrap2 = false;  // toric wrap parities along axes 0, 1
  // Matched defect vertex ids; second = -1 for a rough-face termination.
  std::vector<std::pair<int, int>> matched_pairs;
};

// Reusable buffers for the Monte Carlo inner loop; one per thread.
struct DecoderWorkspace {
  BlossomMatcher matcher;
  Syndrome syndrome;
  MatchingProblem problem;
  std::vector<std::pair<int, int>> pairing;
  std::vector<int> touched;
  std::vector<int> path;
  std::vector<uint8_t> vertex_parity;  // sized to vertex_count, kept zeroed
};

// Vertex bit = parity of incident chain edges; rough terminations
// contribute nothing. Excluded edges must not appear in the chain.
Syndrome extract_syndrome(const ErrorChain& chain, const SectorGraph& graph);
void extract_syndrome(const ErrorChain& chain, const SectorGraph& graph,
                      DecoderWorkspace& ws, Syndrome& out);

MatchingProblem build_matching_problem(const Syndrome& s,
                                       const SectorGraph& graph);

// Pairs of node indices of the matching problem, minimum total weight.
// Boundary-boundary pairs are omitted; a defect paired to a boundary twin
// is reported as (defect index, -1).
std::vector<std::pair<int, int>> mwpm(const MatchingProblem& p);
std::vector<std::pair<int, int>> mwpm(const MatchingProblem& p,
                                      BlossomMatcher& matcher);

// Union (mod 2) of deterministic shortest paths realizing each pair.
Correction correction_from_pairing(
    const std::vector<std::pair<int, int>>& pairing, const Syndrome& s,
    const SectorGraph& graph);

// Residual must be a cycle (empty boundary), else std::invalid_argument.
// Planar: parity of residual edges in the fixed test plane. Toric: true iff
// either wrap parity is odd.
bool homology_class(const ErrorChain& residual, const SectorGraph& graph);

DecodeOutcome decode(const ErrorChain& chain, const SectorGraph& graph);
void decode(const ErrorChain& chain, const SectorGraph& graph,
            DecoderWorkspace& ws, DecodeOutcome& out);

// chain XOR correction, as a sorted edge list.
ErrorChain residual_chain(const ErrorChain& chain, const Correction& corr);

}  // namespace clustersim
