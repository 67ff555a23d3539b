#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace clustersim {

enum class Boundary : uint8_t { Planar, ToricPeriodic };
enum class Sector : uint8_t { To, Te };
enum class SiteKind : uint8_t { VertexTe, VertexTo, EdgeTe, EdgeTo };
enum class Basis : uint8_t { MeasureZ, MeasureX, Unmeasured };
enum class Face : uint8_t { None, L, R };

const char* to_string(Boundary b);
const char* to_string(Sector s);

// Cluster coordinate u = (u1, u2, u3) with 1 <= u1 <= l, 0 <= u2 <= l-1,
// 1 <= u3 <= d.
struct Coord {
  int u1 = 0, u2 = 0, u3 = 0;
  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

struct LatticeSpec {
  int l = 3;
  int d = 3;
  Boundary boundary = Boundary::Planar;

  // Open boundaries, l and d odd and >= 3.
  static LatticeSpec planar(int l, int d);
  // One storage sector on an L x L x layers torus; reported in cluster
  // convention as l = 2L, d = 2*layers + 1.
  static LatticeSpec toric(int transverse, int layers);

  int toric_transverse() const { return l / 2; }
  int toric_layers() const { return (d - 1) / 2; }

  bool contains(const Coord& u) const {
    return u.u1 >= 1 && u.u1 <= l && u.u2 >= 0 && u.u2 <= l - 1 && u.u3 >= 1 &&
           u.u3 <= d;
  }
  int site_count() const { return l * l * d; }

  // u3-major linearization (u3 slowest, then u2, then u1).
  int site_index(const Coord& u) const;
  Coord site_coord(int index) const;
};

struct SiteRole {
  Coord coordinate;
  SiteKind role;
  Basis basis;
  Face face;
};

// Role/basis/face assignment from coordinate parities. Throws
// std::out_of_range for coordinates outside the cluster.
SiteRole classify_site(const Coord& u, const LatticeSpec& spec);

// One edge of a sector lattice. Endpoints are vertex ids, or -1 when the
// edge leaves the lattice (rough-face termination or excluded pendant).
struct SectorEdge {
  int32_t a = -1;
  int32_t b = -1;
  Coord site;           // cluster coordinate of the carrying qubit (planar)
  uint8_t axis = 0;     // 0: u1, 1: u2, 2: u3
  bool rough = false;   // may terminate error chains without a syndrome
  bool excluded = false;  // never carries errors (exactly-corrected edges)
};

// A decoding sector: syndrome vertices on a cuboid (or toroidal) grid and
// error-support edges between them. Immutable after construction.
class SectorGraph {
 public:
  Sector sector = Sector::To;
  Boundary boundary = Boundary::Planar;

  int vertex_count() const { return vdims_[0] * vdims_[1] * vdims_[2]; }
  const std::array<int, 3>& vertex_dims() const { return vdims_; }
  int vertex_id(int i, int j, int k) const {
    return (k * vdims_[1] + j) * vdims_[0] + i;
  }
  std::array<int, 3> vertex_cell(int v) const {
    return {v % vdims_[0], (v / vdims_[0]) % vdims_[1],
            v / (vdims_[0] * vdims_[1])};
  }
  Coord vertex_coord(int v) const;  // planar only: cluster coordinate

  const std::vector<SectorEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const SectorEdge& edge(int e) const { return edges_[e]; }
  // Sector-local cell of an edge (its grid position along its axis).
  std::array<int, 3> edge_cell(int e) const;
  int edge_axis(int e) const;
  // Planar only: the edge id carrying a given cluster coordinate.
  int edge_id_at(const Coord& u) const;

  // Unweighted graph distance between two vertices.
  int distance(int va, int vb) const;
  // Planar only: distance from a vertex to the nearest rough face.
  int boundary_distance(int v) const;

  // Append the edge ids of a deterministic shortest path (axis-by-axis,
  // u1 then u2 then u3; ties broken toward the positive direction on the
  // torus and toward the lower face for boundary paths).
  void append_path(int va, int vb, std::vector<int>& out) const;
  void append_boundary_path(int v, std::vector<int>& out) const;

  // Homology probes. Planar: membership in the fixed test plane
  // (a correlator slice). Toric: crossing of the wrap seam along axis 0/1.
  int test_plane() const { return test_plane_; }
  bool edge_in_test_plane(int e) const;
  bool edge_in_plane(int e, int plane) const;
  bool edge_on_seam(int e, int axis) const;

  int rough_axis() const { return rough_axis_; }
  // Number of edge planes along the rough axis (valid test-plane indices
  // are 0 .. plane_count()-1).
  int plane_count() const { return vdims_[rough_axis_] + 1; }

  friend SectorGraph build_sector_graph(const LatticeSpec& spec, Sector sector);

 private:
  std::array<int, 3> vdims_{};
  // Per-axis edge grid dims and id offsets; edge id = offset[axis] + cell.
  std::array<std::array<int, 3>, 3> edims_{};
  std::array<int, 3> eoff_{};
  std::vector<SectorEdge> edges_;
  int test_plane_ = 0;
  int rough_axis_ = 0;

  int edge_id(int axis, int i, int j, int k) const {
    const auto& d = edims_[axis];
    return eoff_[axis] + (k * d[1] + j) * d[0] + i;
  }
};

SectorGraph build_sector_graph(const LatticeSpec& spec, Sector sector);

// 2D slice of cluster sites carrying a Bell-correlator product:
// T_XX (sector To, even u2) or T_ZZ (sector Te, odd u1).
struct CorrelatorSlice {
  Sector sector;
  int index;
  std::vector<Coord> sites;
};

// Throws std::invalid_argument for wrong-parity indices or toric specs.
CorrelatorSlice correlator_slice(const LatticeSpec& spec, Sector sector,
                                 int index);

}  // namespace clustersim
