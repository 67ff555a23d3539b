#pragma once

#include <cstdint>
#include <vector>

namespace clustersim {

// Primal-dual blossom matcher on dense graphs, O(n^3). Weights are
// nonnegative integers given as a row-major n*n symmetric matrix (diagonal
// ignored). Instances hold reusable workspace and are not thread-safe; use
// one per thread.
class BlossomMatcher {
 public:
  // Minimum-weight perfect matching; n must be even and the graph complete.
  // Returns mate[v] for v in [0, n).
  const std::vector<int>& min_weight_perfect_matching(
      int n, const std::vector<int64_t>& weights);

  // Maximum-weight matching (possibly non-perfect); edges with weight 0 are
  // treated as absent. Unmatched vertices get mate -1.
  const std::vector<int>& max_weight_matching(int n,
                                              const std::vector<int64_t>& weights);

  int64_t last_weight() const { return last_weight_; }

 private:
  struct Edge {
    int u = 0, v = 0;
    int64_t w = 0;
  };

  void reserve(int n);
  void run(int n);

  int64_t e_delta(const Edge& e) const {
    return lab_[e.u] + lab_[e.v] - g_[e.u * cap_ + e.v].w * 2;
  }
  void update_slack(int u, int x);
  void set_slack(int x);
  void q_push(int x);
  void set_st(int x, int b);
  int get_pr(int b, int xr);
  void set_match(int u, int v);
  void augment(int u, int v);
  int get_lca(int u, int v);
  void add_blossom(int u, int lca, int v);
  void expand_blossom(int b);
  bool on_found_edge(const Edge& e);
  bool grow_phase();

  int n_ = 0, n_x_ = 0, cap_ = 0;
  int lca_tick_ = 0;
  std::vector<Edge> g_;
  std::vector<int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<int> flower_from_;  // stride cap_
  std::vector<std::vector<int>> flower_;
  std::vector<int> queue_;
  size_t q_head_ = 0;
  std::vector<int> mate_;
  int64_t last_weight_ = 0;
};

}  // namespace clustersim
