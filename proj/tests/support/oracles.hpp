#pragma once

// Independent reference implementations used only by tests: brute-force
// matching, BFS distances on the explicit sector graph, and GF(2) rank.
// These must stay free of the production code paths they check.

#include <cstdint>
#include <utility>
#include <vector>

#include "clustersim/decoder.hpp"
#include "clustersim/lattice.hpp"

namespace clustersim::testing {

// Minimum-weight perfect matching by exhaustive recursion (n even, n <= 14).
int64_t brute_force_perfect_matching(int n, const std::vector<int64_t>& w);

// Minimum-weight pairing of defects where each defect may also be matched
// to the rough boundary at its own cost. Mirrors the planar decoding rule.
int64_t brute_force_boundary_pairing(const std::vector<int64_t>& pair_w,
                                     const std::vector<int64_t>& boundary_w,
                                     int m);

// BFS over non-excluded edges; rough edges do not leave the lattice.
std::vector<int> bfs_distances(const SectorGraph& g, int source);

// Shortest hop count from v through a rough edge off the lattice.
int bfs_boundary_distance(const SectorGraph& g, int v);

// Minimum weight over all chains with the given syndrome, found by BFS over
// (defect pairing) shortest paths == brute force on the matching problem.
// Exhaustive decode check: enumerate every correction chain of weight <=
// max_weight with boundary handling is intractable; instead tests compare
// matching costs and cycle properties.

// Rank of a set of binary vectors over GF(2).
int gf2_rank(std::vector<std::vector<uint64_t>> rows);

}  // namespace clustersim::testing
