#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "clustersim/lattice.hpp"

namespace clustersim {

// Pauli operator in binary-symplectic form: i^phase * prod_q X_q^x Z_q^z.
// Hermitian operators satisfy phase == popcount(x&z) mod 2 and carry a
// well-defined sign of +-1.
class PauliOp {
 public:
  PauliOp() = default;
  explicit PauliOp(int n);

  int qubits() const { return n_; }
  bool x(int q) const { return x_[q >> 6] >> (q & 63) & 1; }
  bool z(int q) const { return z_[q >> 6] >> (q & 63) & 1; }
  void set_x(int q) { x_[q >> 6] |= 1ull << (q & 63); }
  void set_z(int q) { z_[q >> 6] |= 1ull << (q & 63); }

  int phase() const { return phase_; }
  void negate() { phase_ = (phase_ + 2) & 3; }
  // +1 or -1; throws for non-Hermitian phases.
  int sign() const;
  bool hermitian() const;

  bool commutes_with(const PauliOp& o) const;
  // this *= other, with the i^phase bookkeeping of the XZ convention.
  void rmul(const PauliOp& o);

  bool same_letters(const PauliOp& o) const {
    return x_ == o.x_ && z_ == o.z_;
  }
  bool identity_letters() const;
  int weight() const;

  const std::vector<uint64_t>& x_mask() const { return x_; }
  const std::vector<uint64_t>& z_mask() const { return z_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> x_, z_;
  uint8_t phase_ = 0;
};

// Stabilizer state as n commuting generators plus destabilizers, supporting
// arbitrary Pauli measurements. Sized for exact verification on small
// clusters, not for performance.
class Tableau {
 public:
  static constexpr int kMaxQubits = 512;

  explicit Tableau(int n);  // |0...0>
  // Stabilizer group {K_u}: X at u, Z on the in-range cluster neighbors.
  static Tableau cluster_state(const LatticeSpec& spec);

  int qubits() const { return n_; }
  const PauliOp& stabilizer(int i) const { return stab_[i]; }
  const PauliOp& destabilizer(int i) const { return destab_[i]; }

  // Z error: flips the sign of every generator with an X at q.
  void apply_z(int q);

  struct MeasureResult {
    int outcome;  // +1 or -1
    bool deterministic;
  };
  MeasureResult measure(const PauliOp& p, std::mt19937_64& rng);
  MeasureResult measure_z(int q, std::mt19937_64& rng);
  MeasureResult measure_x(int q, std::mt19937_64& rng);

 private:
  int n_;
  std::vector<PauliOp> stab_, destab_;
};

}  // namespace clustersim
