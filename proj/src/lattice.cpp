#include "clustersim/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace clustersim {

const char* to_string(Boundary b) {
  return b == Boundary::Planar ? "planar" : "toric";
}

const char* to_string(Sector s) { return s == Sector::To ? "To" : "Te"; }

LatticeSpec LatticeSpec::planar(int l, int d) {
  if (l < 3 || d < 3 || l % 2 == 0 || d % 2 == 0)
    throw std::invalid_argument("planar lattice requires odd l, d >= 3");
  return {l, d, Boundary::Planar};
}

LatticeSpec LatticeSpec::toric(int transverse, int layers) {
  if (transverse < 2 || layers < 1)
    throw std::invalid_argument("toric lattice requires L >= 2, layers >= 1");
  return {2 * transverse, 2 * layers + 1, Boundary::ToricPeriodic};
}

int LatticeSpec::site_index(const Coord& u) const {
  if (!contains(u)) throw std::out_of_range("coordinate outside cluster");
  return ((u.u3 - 1) * l + u.u2) * l + (u.u1 - 1);
}

Coord LatticeSpec::site_coord(int index) const {
  if (index < 0 || index >= site_count())
    throw std::out_of_range("site index outside cluster");
  Coord u;
  u.u1 = index % l + 1;
  u.u2 = (index / l) % l;
  u.u3 = index / (l * l) + 1;
  return u;
}

SiteRole classify_site(const Coord& u, const LatticeSpec& spec) {
  if (!spec.contains(u)) throw std::out_of_range("coordinate outside cluster");
  const int odd = (u.u1 & 1) + (u.u2 & 1) + (u.u3 & 1);
  SiteRole r;
  r.coordinate = u;
  switch (odd) {
    case 0: r.role = SiteKind::VertexTe; break;
    case 3: r.role = SiteKind::VertexTo; break;
    case 1: r.role = SiteKind::EdgeTe; break;
    default: r.role = SiteKind::EdgeTo; break;
  }
  r.face = Face::None;
  if (spec.boundary == Boundary::Planar && ((u.u1 & 1) ^ (u.u2 & 1))) {
    if (u.u3 == 1) r.face = Face::L;
    if (u.u3 == spec.d) r.face = Face::R;
  }
  if (odd == 0 || odd == 3)
    r.basis = Basis::MeasureZ;
  else
    r.basis = r.face == Face::None ? Basis::MeasureX : Basis::Unmeasured;
  return r;
}

namespace {

// Edge-grid conventions per sector. "Shifted" axes index an edge by its
// upper endpoint, so index 0 and index dim are the boundary-piercing edges.
struct SectorShape {
  std::array<int, 3> vdims;
  std::array<std::array<int, 3>, 3> edims;
  std::array<bool, 3> shifted;
  int rough_axis;
};

SectorShape planar_shape(const LatticeSpec& spec, Sector sector) {
  SectorShape s;
  if (sector == Sector::To) {
    // Vertices (o,o,o): u = (2i+1, 2j+1, 2k+1).
    const int n1 = (spec.l + 1) / 2, n2 = (spec.l - 1) / 2,
              n3 = (spec.d + 1) / 2;
    s.vdims = {n1, n2, n3};
    s.edims = {{{n1 - 1, n2, n3}, {n1, n2 + 1, n3}, {n1, n2, n3 - 1}}};
    s.shifted = {false, true, false};
    s.rough_axis = 1;
  } else {
    // Vertices (e,e,e): u = (2i+2, 2j, 2k+2).
    const int m1 = (spec.l - 1) / 2, m2 = (spec.l + 1) / 2,
              m3 = (spec.d - 1) / 2;
    s.vdims = {m1, m2, m3};
    s.edims = {{{m1 + 1, m2, m3}, {m1, m2 - 1, m3}, {m1, m2, m3 + 1}}};
    s.shifted = {true, false, true};
    s.rough_axis = 0;
  }
  return s;
}

}  // namespace

SectorGraph build_sector_graph(const LatticeSpec& spec, Sector sector) {
  SectorGraph g;
  g.sector = sector;
  g.boundary = spec.boundary;

  if (spec.boundary == Boundary::ToricPeriodic) {
    const int L = spec.toric_transverse(), D = spec.toric_layers();
    g.vdims_ = {L, L, D};
    for (int ax = 0; ax < 3; ++ax) g.edims_[ax] = {L, L, D};
    g.eoff_ = {0, L * L * D, 2 * L * L * D};
    g.rough_axis_ = 0;
    g.test_plane_ = 0;
    g.edges_.reserve(3 * L * L * D);
    const std::array<int, 3> dims = {L, L, D};
    for (int ax = 0; ax < 3; ++ax)
      for (int k = 0; k < D; ++k)
        for (int j = 0; j < L; ++j)
          for (int i = 0; i < L; ++i) {
            SectorEdge e;
            e.axis = static_cast<uint8_t>(ax);
            std::array<int, 3> c = {i, j, k};
            e.a = g.vertex_id(c[0], c[1], c[2]);
            c[ax] = (c[ax] + 1) % dims[ax];
            e.b = g.vertex_id(c[0], c[1], c[2]);
            g.edges_.push_back(e);
          }
    return g;
  }

  const SectorShape s = planar_shape(spec, sector);
  g.vdims_ = s.vdims;
  g.edims_ = s.edims;
  g.eoff_[0] = 0;
  g.eoff_[1] = s.edims[0][0] * s.edims[0][1] * s.edims[0][2];
  g.eoff_[2] = g.eoff_[1] + s.edims[1][0] * s.edims[1][1] * s.edims[1][2];
  g.rough_axis_ = s.rough_axis;
  g.test_plane_ = (s.vdims[s.rough_axis] + 1) / 2;

  const bool is_to = sector == Sector::To;
  for (int ax = 0; ax < 3; ++ax) {
    const auto& ed = s.edims[ax];
    for (int k = 0; k < ed[2]; ++k)
      for (int j = 0; j < ed[1]; ++j)
        for (int i = 0; i < ed[0]; ++i) {
          SectorEdge e;
          e.axis = static_cast<uint8_t>(ax);
          std::array<int, 3> lo = {i, j, k}, hi = {i, j, k};
          if (s.shifted[ax]) {
            lo[ax] -= 1;  // connects index-1 and index
          } else {
            hi[ax] += 1;
          }
          const bool lo_in = lo[ax] >= 0;
          const bool hi_in = hi[ax] < s.vdims[ax];
          e.a = lo_in ? g.vertex_id(lo[0], lo[1], lo[2]) : -1;
          e.b = hi_in ? g.vertex_id(hi[0], hi[1], hi[2]) : -1;
          if (e.a < 0) std::swap(e.a, e.b);
          // Cluster coordinate of the carrying qubit.
          if (is_to) {
            if (ax == 0) e.site = {2 * i + 2, 2 * j + 1, 2 * k + 1};
            if (ax == 1) e.site = {2 * i + 1, 2 * j, 2 * k + 1};
            if (ax == 2) e.site = {2 * i + 1, 2 * j + 1, 2 * k + 2};
          } else {
            if (ax == 0) e.site = {2 * i + 1, 2 * j, 2 * k + 2};
            if (ax == 1) e.site = {2 * i + 2, 2 * j + 1, 2 * k + 2};
            if (ax == 2) e.site = {2 * i + 2, 2 * j, 2 * k + 1};
          }
          if (!lo_in || !hi_in) {
            // To leaks through the u2 faces; Te through the u1 faces. The
            // Te pendants at u3 = 1, d are exactly corrected, never errored.
            if (ax == s.rough_axis)
              e.rough = true;
            else
              e.excluded = true;
          }
          g.edges_.push_back(e);
        }
  }
  return g;
}

Coord SectorGraph::vertex_coord(int v) const {
  if (boundary != Boundary::Planar)
    throw std::logic_error("vertex_coord is planar-only");
  const auto c = vertex_cell(v);
  if (sector == Sector::To) return {2 * c[0] + 1, 2 * c[1] + 1, 2 * c[2] + 1};
  return {2 * c[0] + 2, 2 * c[1], 2 * c[2] + 2};
}

int SectorGraph::edge_axis(int e) const {
  if (e >= eoff_[2]) return 2;
  return e >= eoff_[1] ? 1 : 0;
}

std::array<int, 3> SectorGraph::edge_cell(int e) const {
  const int ax = edge_axis(e);
  const auto& d = edims_[ax];
  const int r = e - eoff_[ax];
  return {r % d[0], (r / d[0]) % d[1], r / (d[0] * d[1])};
}

int SectorGraph::edge_id_at(const Coord& u) const {
  if (boundary != Boundary::Planar)
    throw std::logic_error("edge_id_at is planar-only");
  const bool o1 = u.u1 & 1, o2 = u.u2 & 1, o3 = u.u3 & 1;
  const int odd = o1 + o2 + o3;
  if ((sector == Sector::To && odd != 2) || (sector == Sector::Te && odd != 1))
    throw std::invalid_argument("coordinate is not an edge of this sector");
  int ax;
  if (sector == Sector::To)
    ax = !o1 ? 0 : (!o2 ? 1 : 2);
  else
    ax = o1 ? 0 : (o2 ? 1 : 2);
  int i, j, k;
  if (sector == Sector::To) {
    if (ax == 0) i = (u.u1 - 2) / 2, j = (u.u2 - 1) / 2, k = (u.u3 - 1) / 2;
    else if (ax == 1) i = (u.u1 - 1) / 2, j = u.u2 / 2, k = (u.u3 - 1) / 2;
    else i = (u.u1 - 1) / 2, j = (u.u2 - 1) / 2, k = (u.u3 - 2) / 2;
  } else {
    if (ax == 0) i = (u.u1 - 1) / 2, j = u.u2 / 2, k = (u.u3 - 2) / 2;
    else if (ax == 1) i = (u.u1 - 2) / 2, j = (u.u2 - 1) / 2, k = (u.u3 - 2) / 2;
    else i = (u.u1 - 2) / 2, j = u.u2 / 2, k = (u.u3 - 1) / 2;
  }
  const auto& d = edims_[ax];
  if (i < 0 || j < 0 || k < 0 || i >= d[0] || j >= d[1] || k >= d[2])
    throw std::out_of_range("edge coordinate outside sector grid");
  return edge_id(ax, i, j, k);
}

int SectorGraph::distance(int va, int vb) const {
  const auto a = vertex_cell(va), b = vertex_cell(vb);
  int dist = 0;
  for (int ax = 0; ax < 3; ++ax) {
    int delta = std::abs(a[ax] - b[ax]);
    if (boundary == Boundary::ToricPeriodic)
      delta = std::min(delta, vdims_[ax] - delta);
    dist += delta;
  }
  return dist;
}

int SectorGraph::boundary_distance(int v) const {
  if (boundary != Boundary::Planar)
    throw std::logic_error("no rough faces on the torus");
  const int c = vertex_cell(v)[rough_axis_];
  return std::min(c + 1, vdims_[rough_axis_] - c);
}

void SectorGraph::append_path(int va, int vb, std::vector<int>& out) const {
  auto c = vertex_cell(va);
  const auto target = vertex_cell(vb);
  for (int ax = 0; ax < 3; ++ax) {
    // Shifted axes index edges by their upper endpoint and have one more
    // edge plane than vertex planes; toric axes wrap.
    const bool shifted = edims_[ax][ax] == vdims_[ax] + 1;
    if (boundary == Boundary::ToricPeriodic) {
      const int dim = vdims_[ax];
      int fwd = (target[ax] - c[ax] + dim) % dim;
      const bool forward = fwd <= dim - fwd;
      while (c[ax] != target[ax]) {
        std::array<int, 3> idx = c;
        if (forward) {
          out.push_back(edge_id(ax, idx[0], idx[1], idx[2]));
          c[ax] = (c[ax] + 1) % dim;
        } else {
          idx[ax] = (c[ax] - 1 + dim) % dim;
          out.push_back(edge_id(ax, idx[0], idx[1], idx[2]));
          c[ax] = idx[ax];
        }
      }
      continue;
    }
    while (c[ax] != target[ax]) {
      const int step = c[ax] < target[ax] ? 1 : -1;
      std::array<int, 3> idx = c;
      if (step > 0)
        idx[ax] = shifted ? c[ax] + 1 : c[ax];
      else
        idx[ax] = shifted ? c[ax] : c[ax] - 1;
      out.push_back(edge_id(ax, idx[0], idx[1], idx[2]));
      c[ax] += step;
    }
  }
}

void SectorGraph::append_boundary_path(int v, std::vector<int>& out) const {
  if (boundary != Boundary::Planar)
    throw std::logic_error("no rough faces on the torus");
  const auto c = vertex_cell(v);
  const int ax = rough_axis_;
  const int pos = c[ax], dim = vdims_[ax];
  std::array<int, 3> idx = c;
  if (pos + 1 <= dim - pos) {
    for (int t = pos; t >= 0; --t) {
      idx[ax] = t;
      out.push_back(edge_id(ax, idx[0], idx[1], idx[2]));
    }
  } else {
    for (int t = pos + 1; t <= dim; ++t) {
      idx[ax] = t;
      out.push_back(edge_id(ax, idx[0], idx[1], idx[2]));
    }
  }
}

bool SectorGraph::edge_in_plane(int e, int plane) const {
  if (boundary != Boundary::Planar)
    throw std::logic_error("test planes are planar-only");
  if (edge_axis(e) != rough_axis_) return false;
  return edge_cell(e)[rough_axis_] == plane;
}

bool SectorGraph::edge_in_test_plane(int e) const {
  return edge_in_plane(e, test_plane_);
}

bool SectorGraph::edge_on_seam(int e, int axis) const {
  if (boundary != Boundary::ToricPeriodic)
    throw std::logic_error("wrap seams are toric-only");
  if (edge_axis(e) != axis) return false;
  return edge_cell(e)[axis] == vdims_[axis] - 1;
}

CorrelatorSlice correlator_slice(const LatticeSpec& spec, Sector sector,
                                 int index) {
  if (spec.boundary != Boundary::Planar)
    throw std::invalid_argument("correlator slices are planar-only");
  CorrelatorSlice s{sector, index, {}};
  if (sector == Sector::To) {
    if (index % 2 != 0 || index < 0 || index > spec.l - 1)
      throw std::invalid_argument("T_XX slice needs an even u2 in range");
    for (int u3 = 1; u3 <= spec.d; u3 += 2)
      for (int u1 = 1; u1 <= spec.l; u1 += 2)
        s.sites.push_back({u1, index, u3});
  } else {
    if (index % 2 != 1 || index < 1 || index > spec.l)
      throw std::invalid_argument("T_ZZ slice needs an odd u1 in range");
    for (int u3 = 2; u3 <= spec.d - 1; u3 += 2)
      for (int u2 = 0; u2 <= spec.l - 1; u2 += 2)
        s.sites.push_back({index, u2, u3});
  }
  return s;
}

}  // namespace clustersim
