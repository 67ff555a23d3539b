#include "clustersim/decoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace clustersim {

void extract_syndrome(const ErrorChain& chain, const SectorGraph& graph,
                      DecoderWorkspace& ws, Syndrome& out) {
  out.defects.clear();
  ws.vertex_parity.resize(graph.vertex_count(), 0);
  ws.touched.clear();
  for (int e : chain.edges) {
    const SectorEdge& ed = graph.edge(e);
    if (ed.excluded)
      throw std::invalid_argument("error chain touches an excluded edge");
    for (int v : {ed.a, ed.b}) {
      if (v < 0) continue;
      if (!ws.vertex_parity[v]) ws.touched.push_back(v);
      ws.vertex_parity[v] ^= 1;
    }
  }
  // touched may hold a vertex more than once; clearing on read dedupes.
  for (int v : ws.touched) {
    if (ws.vertex_parity[v]) {
      out.defects.push_back(v);
      ws.vertex_parity[v] = 0;
    }
  }
  std::sort(out.defects.begin(), out.defects.end());
}

Syndrome extract_syndrome(const ErrorChain& chain, const SectorGraph& graph) {
  DecoderWorkspace ws;
  Syndrome s;
  extract_syndrome(chain, graph, ws, s);
  return s;
}

MatchingProblem build_matching_problem(const Syndrome& s,
                                       const SectorGraph& graph) {
  MatchingProblem p;
  p.n_defects = static_cast<int>(s.defects.size());
  p.with_boundary = graph.boundary == Boundary::Planar;
  p.defects = s.defects;
  if (!p.with_boundary && p.n_defects % 2 != 0)
    throw std::logic_error("odd defect count on the torus");
  const int n = p.nodes();
  p.weights.assign(static_cast<size_t>(n) * n, 0);
  const int m = p.n_defects;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int64_t w = graph.distance(s.defects[i], s.defects[j]);
      p.weights[i * static_cast<size_t>(n) + j] = w;
      p.weights[j * static_cast<size_t>(n) + i] = w;
    }
    if (p.with_boundary) {
      const int64_t bw = graph.boundary_distance(s.defects[i]);
      // Boundary twins are interchangeable: the cost of sending defect i to
      // the rough face does not depend on which twin absorbs it.
      for (int j = 0; j < m; ++j) {
        p.weights[i * static_cast<size_t>(n) + (m + j)] = bw;
        p.weights[(m + j) * static_cast<size_t>(n) + i] = bw;
      }
    }
  }
  return p;
}

std::vector<std::pair<int, int>> mwpm(const MatchingProblem& p,
                                      BlossomMatcher& matcher) {
  std::vector<std::pair<int, int>> pairs;
  const int n = p.nodes();
  if (n == 0) return pairs;
  const auto& mate = matcher.min_weight_perfect_matching(n, p.weights);
  const int m = p.n_defects;
  for (int i = 0; i < m; ++i) {
    const int j = mate[i];
    if (j >= m)
      pairs.emplace_back(i, -1);
    else if (j > i)
      pairs.emplace_back(i, j);
  }
  return pairs;
}

std::vector<std::pair<int, int>> mwpm(const MatchingProblem& p) {
  BlossomMatcher matcher;
  return mwpm(p, matcher);
}

namespace {

// Keep edges that appear an odd number of times.
void reduce_mod2(std::vector<int>& edges) {
  std::sort(edges.begin(), edges.end());
  size_t out = 0;
  for (size_t i = 0; i < edges.size();) {
    size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if ((j - i) % 2 == 1) edges[out++] = edges[i];
    i = j;
  }
  edges.resize(out);
}

}  // namespace

Correction correction_from_pairing(
    const std::vector<std::pair<int, int>>& pairing, const Syndrome& s,
    const SectorGraph& graph) {
  Correction c;
  for (const auto& [i, j] : pairing) {
    if (j < 0)
      graph.append_boundary_path(s.defects[i], c.edges);
    else
      graph.append_path(s.defects[i], s.defects[j], c.edges);
  }
  reduce_mod2(c.edges);
  return c;
}

ErrorChain residual_chain(const ErrorChain& chain, const Correction& corr) {
  ErrorChain r;
  std::set_symmetric_difference(chain.edges.begin(), chain.edges.end(),
                                corr.edges.begin(), corr.edges.end(),
                                std::back_inserter(r.edges));
  return r;
}

bool homology_class(const ErrorChain& residual, const SectorGraph& graph) {
  DecoderWorkspace ws;
  Syndrome s;
  extract_syndrome(residual, graph, ws, s);
  if (!s.defects.empty())
    throw std::invalid_argument("residual chain has nonzero boundary");
  if (graph.boundary == Boundary::Planar) {
    int crossings = 0;
    for (int e : residual.edges)
      if (graph.edge_in_test_plane(e)) ++crossings;
    return crossings % 2 == 1;
  }
  int w1 = 0, w2 = 0;
  for (int e : residual.edges) {
    if (graph.edge_on_seam(e, 0)) ++w1;
    if (graph.edge_on_seam(e, 1)) ++w2;
  }
  return w1 % 2 == 1 || w2 % 2 == 1;
}

void decode(const ErrorChain& chain, const SectorGraph& graph,
            DecoderWorkspace& ws, DecodeOutcome& out) {
  extract_syndrome(chain, graph, ws, ws.syndrome);
  ws.problem = build_matching_problem(ws.syndrome, graph);
  ws.pairing = mwpm(ws.problem, ws.matcher);
  out.correction = correction_from_pairing(ws.pairing, ws.syndrome, graph);
  out.matched_pairs.clear();
  for (const auto& [i, j] : ws.pairing)
    out.matched_pairs.emplace_back(ws.syndrome.defects[i],
                                   j < 0 ? -1 : ws.syndrome.defects[j]);
  const ErrorChain residual = residual_chain(chain, out.correction);
  if (graph.boundary == Boundary::Planar) {
    int crossings = 0;
    for (int e : residual.edges)
      if (graph.edge_in_test_plane(e)) ++crossings;
    out.nontrivial = crossings % 2 == 1;
    out.wrap1 = out.wrap2 = false;
  } else {
    int w1 = 0, w2 = 0;
    for (int e : residual.edges) {
      if (graph.edge_on_seam(e, 0)) ++w1;
      if (graph.edge_on_seam(e, 1)) ++w2;
    }
    out.wrap1 = w1 % 2 == 1;
    out.wrap2 = w2 % 2 == 1;
    out.nontrivial = out.wrap1 || out.wrap2;
  }
}

DecodeOutcome decode(const ErrorChain& chain, const SectorGraph& graph) {
  DecoderWorkspace ws;
  DecodeOutcome out;
  decode(chain, graph, ws, out);
  return out;
}

}  // namespace clustersim
