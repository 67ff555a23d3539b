#include "clustersim/blossom.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace clustersim {

namespace {
constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
}

void BlossomMatcher::reserve(int n) {
  const int cap = 2 * n + 2;
  if (cap_ >= cap) return;
  cap_ = cap;
  g_.assign(static_cast<size_t>(cap_) * cap_, Edge{});
  lab_.assign(cap_, 0);
  match_.assign(cap_, 0);
  slack_.assign(cap_, 0);
  st_.assign(cap_, 0);
  pa_.assign(cap_, 0);
  s_.assign(cap_, -1);
  vis_.assign(cap_, 0);
  lca_tick_ = 0;
  flower_from_.assign(static_cast<size_t>(cap_) * cap_, 0);
  flower_.assign(cap_, {});
}

void BlossomMatcher::update_slack(int u, int x) {
  if (!slack_[x] || e_delta(g_[u * cap_ + x]) < e_delta(g_[slack_[x] * cap_ + x]))
    slack_[x] = u;
}

void BlossomMatcher::set_slack(int x) {
  slack_[x] = 0;
  for (int u = 1; u <= n_; ++u)
    if (g_[u * cap_ + x].w > 0 && st_[u] != x && s_[st_[u]] == 0)
      update_slack(u, x);
}

void BlossomMatcher::q_push(int x) {
  if (x <= n_) {
    queue_.push_back(x);
  } else {
    for (int t : flower_[x]) q_push(t);
  }
}

void BlossomMatcher::set_st(int x, int b) {
  st_[x] = b;
  if (x > n_)
    for (int t : flower_[x]) set_st(t, b);
}

int BlossomMatcher::get_pr(int b, int xr) {
  auto& f = flower_[b];
  const int pr =
      static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
  if (pr % 2 == 1) {
    std::reverse(f.begin() + 1, f.end());
    return static_cast<int>(f.size()) - pr;
  }
  return pr;
}

void BlossomMatcher::set_match(int u, int v) {
  match_[u] = g_[u * cap_ + v].v;
  if (u <= n_) return;
  const Edge e = g_[u * cap_ + v];
  const int xr = flower_from_[u * cap_ + e.u];
  const int pr = get_pr(u, xr);
  auto& f = flower_[u];
  for (int i = 0; i < pr; ++i) set_match(f[i], f[i ^ 1]);
  set_match(xr, v);
  std::rotate(f.begin(), f.begin() + pr, f.end());
}

void BlossomMatcher::augment(int u, int v) {
  while (true) {
    const int xnv = st_[match_[u]];
    set_match(u, v);
    if (!xnv) return;
    set_match(xnv, st_[pa_[xnv]]);
    u = st_[pa_[xnv]];
    v = xnv;
  }
}

int BlossomMatcher::get_lca(int u, int v) {
  for (++lca_tick_; u || v; std::swap(u, v)) {
    if (u == 0) continue;
    if (vis_[u] == lca_tick_) return u;
    vis_[u] = lca_tick_;
    u = st_[match_[u]];
    if (u) u = st_[pa_[u]];
  }
  return 0;
}

void BlossomMatcher::add_blossom(int u, int lca, int v) {
  int b = n_ + 1;
  while (b <= n_x_ && st_[b]) ++b;
  if (b > n_x_) ++n_x_;
  lab_[b] = 0;
  s_[b] = 0;
  match_[b] = match_[lca];
  auto& f = flower_[b];
  f.clear();
  f.push_back(lca);
  for (int x = u, y; x != lca; x = st_[pa_[y]]) {
    f.push_back(x);
    f.push_back(y = st_[match_[x]]);
    q_push(y);
  }
  std::reverse(f.begin() + 1, f.end());
  for (int x = v, y; x != lca; x = st_[pa_[y]]) {
    f.push_back(x);
    f.push_back(y = st_[match_[x]]);
    q_push(y);
  }
  set_st(b, b);
  for (int x = 1; x <= n_x_; ++x) g_[b * cap_ + x].w = g_[x * cap_ + b].w = 0;
  for (int x = 1; x <= n_; ++x) flower_from_[b * cap_ + x] = 0;
  for (int xs : f) {
    for (int x = 1; x <= n_x_; ++x)
      if (g_[b * cap_ + x].w == 0 ||
          e_delta(g_[xs * cap_ + x]) < e_delta(g_[b * cap_ + x])) {
        g_[b * cap_ + x] = g_[xs * cap_ + x];
        g_[x * cap_ + b] = g_[x * cap_ + xs];
      }
    for (int x = 1; x <= n_; ++x)
      if (flower_from_[xs * cap_ + x]) flower_from_[b * cap_ + x] = xs;
  }
  set_slack(b);
}

void BlossomMatcher::expand_blossom(int b) {
  auto& f = flower_[b];
  for (int t : f) set_st(t, t);
  const int xr = flower_from_[b * cap_ + g_[b * cap_ + pa_[b]].u];
  const int pr = get_pr(b, xr);
  for (int i = 0; i < pr; i += 2) {
    const int xs = f[i], xns = f[i + 1];
    pa_[xs] = g_[xns * cap_ + xs].u;
    s_[xs] = 1;
    s_[xns] = 0;
    slack_[xs] = 0;
    set_slack(xns);
    q_push(xns);
  }
  s_[xr] = 1;
  pa_[xr] = pa_[b];
  for (size_t i = pr + 1; i < f.size(); ++i) {
    const int xs = f[i];
    s_[xs] = -1;
    set_slack(xs);
  }
  st_[b] = 0;
}

bool BlossomMatcher::on_found_edge(const Edge& e) {
  const int u = st_[e.u], v = st_[e.v];
  if (s_[v] == -1) {
    pa_[v] = e.u;
    s_[v] = 1;
    const int nu = st_[match_[v]];
    slack_[v] = slack_[nu] = 0;
    s_[nu] = 0;
    q_push(nu);
  } else if (s_[v] == 0) {
    const int lca = get_lca(u, v);
    if (!lca) {
      augment(u, v);
      augment(v, u);
      return true;
    }
    add_blossom(u, lca, v);
  }
  return false;
}

bool BlossomMatcher::grow_phase() {
  std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
  std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
  queue_.clear();
  q_head_ = 0;
  for (int x = 1; x <= n_x_; ++x)
    if (st_[x] == x && !match_[x]) {
      pa_[x] = 0;
      s_[x] = 0;
      q_push(x);
    }
  if (queue_.empty()) return false;
  while (true) {
    while (q_head_ < queue_.size()) {
      const int u = queue_[q_head_++];
      if (s_[st_[u]] == 1) continue;
      for (int v = 1; v <= n_; ++v)
        if (g_[u * cap_ + v].w > 0 && st_[u] != st_[v]) {
          if (e_delta(g_[u * cap_ + v]) == 0) {
            if (on_found_edge(g_[u * cap_ + v])) return true;
          } else {
            update_slack(u, st_[v]);
          }
        }
    }
    int64_t d = kInf;
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && slack_[x]) {
        if (s_[x] == -1)
          d = std::min(d, e_delta(g_[slack_[x] * cap_ + x]));
        else if (s_[x] == 0)
          d = std::min(d, e_delta(g_[slack_[x] * cap_ + x]) / 2);
      }
    for (int u = 1; u <= n_; ++u) {
      if (s_[st_[u]] == 0) {
        if (lab_[u] <= d) return false;
        lab_[u] -= d;
      } else if (s_[st_[u]] == 1) {
        lab_[u] += d;
      }
    }
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[b] == b) {
        if (s_[b] == 0)
          lab_[b] += d * 2;
        else if (s_[b] == 1)
          lab_[b] -= d * 2;
      }
    queue_.clear();
    q_head_ = 0;
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
          e_delta(g_[slack_[x] * cap_ + x]) == 0)
        if (on_found_edge(g_[slack_[x] * cap_ + x])) return true;
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
  }
}

void BlossomMatcher::run(int n) {
  n_ = n;
  reserve(n);
  n_x_ = n;
  std::fill(match_.begin(), match_.begin() + n + 1, 0);
  for (int u = 0; u <= n; ++u) {
    st_[u] = u;
    flower_[u].clear();
  }
  int64_t w_max = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      flower_from_[u * cap_ + v] = (u == v ? u : 0);
      w_max = std::max(w_max, g_[u * cap_ + v].w);
    }
  for (int u = 1; u <= n; ++u) lab_[u] = w_max;
  while (grow_phase()) {
  }
  last_weight_ = 0;
  for (int u = 1; u <= n; ++u)
    if (match_[u] && match_[u] < u) last_weight_ += g_[u * cap_ + match_[u]].w;
  mate_.assign(n, -1);
  for (int u = 1; u <= n; ++u) mate_[u - 1] = match_[u] ? match_[u] - 1 : -1;
}

const std::vector<int>& BlossomMatcher::max_weight_matching(
    int n, const std::vector<int64_t>& weights) {
  if (static_cast<int>(weights.size()) != n * n)
    throw std::invalid_argument("weight matrix must be n*n");
  reserve(n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      Edge& e = g_[u * cap_ + v];
      e.u = u;
      e.v = v;
      e.w = u == v ? 0 : weights[(u - 1) * static_cast<size_t>(n) + (v - 1)];
    }
  run(n);
  return mate_;
}

const std::vector<int>& BlossomMatcher::min_weight_perfect_matching(
    int n, const std::vector<int64_t>& weights) {
  if (n % 2 != 0) throw std::invalid_argument("perfect matching needs even n");
  if (static_cast<int>(weights.size()) != n * n)
    throw std::invalid_argument("weight matrix must be n*n");
  if (n == 0) {
    mate_.clear();
    last_weight_ = 0;
    return mate_;
  }
  int64_t w_max = 0;
  for (int64_t w : weights) w_max = std::max(w_max, w);
  // Flip to a maximization problem; any maximum-weight matching on a
  // complete graph with strictly positive weights is perfect.
  const int64_t base = w_max + 1;
  reserve(n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      Edge& e = g_[u * cap_ + v];
      e.u = u;
      e.v = v;
      e.w = u == v
                ? 0
                : base - weights[(u - 1) * static_cast<size_t>(n) + (v - 1)];
    }
  run(n);
  int64_t total = 0;
  for (int u = 0; u < n; ++u) {
    if (mate_[u] < 0) throw std::logic_error("matching is not perfect");
    if (mate_[u] > u) total += weights[u * static_cast<size_t>(n) + mate_[u]];
  }
  last_weight_ = total;
  return mate_;
}

}  // namespace clustersim
