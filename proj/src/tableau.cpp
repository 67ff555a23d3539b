#include "clustersim/tableau.hpp"

#include <bit>
#include <stdexcept>

namespace clustersim {

namespace {

int parity_of_and(const std::vector<uint64_t>& a,
                  const std::vector<uint64_t>& b) {
  uint64_t acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

int popcount_of_and(const std::vector<uint64_t>& a,
                    const std::vector<uint64_t>& b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace

PauliOp::PauliOp(int n) : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

bool PauliOp::hermitian() const {
  return ((phase_ + popcount_of_and(x_, z_)) & 1) == 0;
}

int PauliOp::sign() const {
  const int r = (phase_ - popcount_of_and(x_, z_)) & 3;
  if (r == 0) return 1;
  if (r == 2) return -1;
  throw std::logic_error("sign of a non-Hermitian Pauli");
}

bool PauliOp::commutes_with(const PauliOp& o) const {
  return (parity_of_and(x_, o.z_) ^ parity_of_and(z_, o.x_)) == 0;
}

void PauliOp::rmul(const PauliOp& o) {
  phase_ = static_cast<uint8_t>(
      (phase_ + o.phase_ + 2 * parity_of_and(z_, o.x_)) & 3);
  for (size_t i = 0; i < x_.size(); ++i) {
    x_[i] ^= o.x_[i];
    z_[i] ^= o.z_[i];
  }
}

bool PauliOp::identity_letters() const {
  for (size_t i = 0; i < x_.size(); ++i)
    if (x_[i] | z_[i]) return false;
  return true;
}

int PauliOp::weight() const {
  int c = 0;
  for (size_t i = 0; i < x_.size(); ++i) c += std::popcount(x_[i] | z_[i]);
  return c;
}

Tableau::Tableau(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("tableau size guard exceeded");
  stab_.reserve(n);
  destab_.reserve(n);
  for (int q = 0; q < n; ++q) {
    PauliOp s(n), d(n);
    s.set_z(q);
    d.set_x(q);
    stab_.push_back(s);
    destab_.push_back(d);
  }
}

Tableau Tableau::cluster_state(const LatticeSpec& spec) {
  const int n = spec.site_count();
  Tableau t(n);
  for (int idx = 0; idx < n; ++idx) {
    const Coord u = spec.site_coord(idx);
    PauliOp k(n), d(n);
    k.set_x(idx);
    for (const Coord v :
         {Coord{u.u1 - 1, u.u2, u.u3}, Coord{u.u1 + 1, u.u2, u.u3},
          Coord{u.u1, u.u2 - 1, u.u3}, Coord{u.u1, u.u2 + 1, u.u3},
          Coord{u.u1, u.u2, u.u3 - 1}, Coord{u.u1, u.u2, u.u3 + 1}})
      if (spec.contains(v)) k.set_z(spec.site_index(v));
    d.set_z(idx);
    t.stab_[idx] = k;
    t.destab_[idx] = d;
  }
  return t;
}

void Tableau::apply_z(int q) {
  for (int i = 0; i < n_; ++i) {
    if (stab_[i].x(q)) stab_[i].negate();
    if (destab_[i].x(q)) destab_[i].negate();
  }
}

Tableau::MeasureResult Tableau::measure(const PauliOp& p,
                                        std::mt19937_64& rng) {
  if (p.qubits() != n_) throw std::invalid_argument("qubit count mismatch");
  if (!p.hermitian()) throw std::invalid_argument("non-Hermitian observable");
  int k = -1;
  for (int i = 0; i < n_; ++i)
    if (!stab_[i].commutes_with(p)) {
      k = i;
      break;
    }
  if (k >= 0) {
    for (int i = k + 1; i < n_; ++i)
      if (!stab_[i].commutes_with(p)) stab_[i].rmul(stab_[k]);
    for (int i = 0; i < n_; ++i)
      if (i != k && !destab_[i].commutes_with(p)) destab_[i].rmul(stab_[k]);
    destab_[k] = stab_[k];
    const int outcome = (rng() & 1) ? -1 : 1;
    stab_[k] = p;  // post-measurement stabilizer is outcome * p
    if (outcome < 0) stab_[k].negate();
    return {outcome, false};
  }
  // p lies in +-<stabilizers>: rebuild it through the destabilizer pairing.
  PauliOp acc(n_);
  for (int i = 0; i < n_; ++i)
    if (!destab_[i].commutes_with(p)) acc.rmul(stab_[i]);
  if (!acc.same_letters(p))
    throw std::logic_error("deterministic measurement reconstruction failed");
  return {acc.sign() * p.sign(), true};
}

Tableau::MeasureResult Tableau::measure_z(int q, std::mt19937_64& rng) {
  PauliOp p(n_);
  p.set_z(q);
  return measure(p, rng);
}

Tableau::MeasureResult Tableau::measure_x(int q, std::mt19937_64& rng) {
  PauliOp p(n_);
  p.set_x(q);
  return measure(p, rng);
}

}  // namespace clustersim
