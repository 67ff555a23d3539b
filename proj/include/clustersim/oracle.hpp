#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "clustersim/lattice.hpp"
#include "clustersim/tableau.hpp"

namespace clustersim {

// Raw outcomes of one run of the measurement pattern. outcome[i] is +-1 for
// measured sites and 0 for the unmeasured face qubits.
struct MeasurementRecord {
  uint64_t seed = 0;
  std::vector<int8_t> outcome;

  int at(const LatticeSpec& spec, const Coord& u) const {
    if (!spec.contains(u)) return 1;  // convention: x_u = z_u = 1 outside C
    return outcome[spec.site_index(u)];
  }
};

// Eigenvalues measured on the reduced state of the unmeasured faces:
// plaquette and site code stabilizers on both faces, and the two encoded
// Bell correlators for every representative column.
struct PatternResult {
  MeasurementRecord record;
  std::map<int, int> lambda_plaquette;  // site index of (e,e,1)/(e,e,d) -> +-1
  std::map<int, int> lambda_site;       // site index of (o,o,1)/(o,o,d) -> +-1
  std::map<int, int> xx_sign;           // even u2 -> measured XX eigenvalue
  std::map<int, int> zz_sign;           // odd u1 -> measured ZZ eigenvalue
  Tableau tableau{1};                   // post-measurement state
};

// Measures the pattern on a thermal cluster state with Z errors injected at
// the given sites before any measurement. Branches are resolved by the
// seeded generator; a fixed seed replays the run bit for bit. The optional
// order permutes the single-site measurements.
PatternResult run_pattern(const LatticeSpec& spec,
                          const std::vector<int>& z_error_sites, uint64_t seed);
PatternResult run_pattern(const LatticeSpec& spec,
                          const std::vector<int>& z_error_sites, uint64_t seed,
                          const std::vector<int>& site_order);

// All parity-constraint bits derived from one run. +1 everywhere on an
// error-free state. The identified pendant-edge errors are corrected before
// the Te bits are evaluated, matching their exact identification.
struct ConstraintBits {
  std::map<int, int> to_vertex;  // site index of a To vertex -> +-1
  std::map<int, int> te_vertex;  // site index of a Te vertex -> +-1
  std::map<int, int> pendant;    // site index of (e,e,1)/(e,e,d) -> +-1
};

ConstraintBits check_constraints(const PatternResult& run,
                                 const LatticeSpec& spec);

// Outcome-formula values for the reduced-state eigenvalues.
int lambda_plaquette_formula(const MeasurementRecord& rec,
                             const LatticeSpec& spec, const Coord& u);
int lambda_site_formula(const MeasurementRecord& rec, const LatticeSpec& spec,
                        const Coord& u);
int lambda_xx_formula(const MeasurementRecord& rec, const LatticeSpec& spec,
                      int u2);
int lambda_zz_formula(const MeasurementRecord& rec, const LatticeSpec& spec,
                      int u1);

// Operator builders (planar specs).
PauliOp plaquette_operator(const LatticeSpec& spec, const Coord& u);
PauliOp site_operator(const LatticeSpec& spec, const Coord& u);
PauliOp logical_xx(const LatticeSpec& spec, int u2);
PauliOp logical_zz(const LatticeSpec& spec, int u1);
PauliOp logical_x_l(const LatticeSpec& spec, int u2);

// In-range cluster neighbors and same-sublattice neighbors (distance 2).
std::vector<Coord> cluster_neighbors(const LatticeSpec& spec, const Coord& u);
std::vector<Coord> sublattice_neighbors(const LatticeSpec& spec,
                                        const Coord& u);

}  // namespace clustersim
