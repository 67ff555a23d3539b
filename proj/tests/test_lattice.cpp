#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "clustersim/lattice.hpp"
#include "support/oracles.hpp"

using namespace clustersim;

TEST_CASE("site classification follows the parity tables") {
  const auto spec = LatticeSpec::planar(3, 3);

  auto r = classify_site({2, 2, 2}, spec);
  CHECK(r.role == SiteKind::VertexTe);
  CHECK(r.basis == Basis::MeasureZ);
  CHECK(r.face == Face::None);

  r = classify_site({1, 1, 2}, spec);
  CHECK(r.role == SiteKind::EdgeTo);
  CHECK(r.basis == Basis::MeasureX);

  // (o,e,1) lies in the face set L; as a parity class it is an edge of T_o.
  r = classify_site({1, 2, 1}, spec);
  CHECK(r.role == SiteKind::EdgeTo);
  CHECK(r.basis == Basis::Unmeasured);
  CHECK(r.face == Face::L);

  r = classify_site({2, 1, 3}, spec);
  CHECK(r.face == Face::R);
  CHECK(r.basis == Basis::Unmeasured);

  CHECK_THROWS_AS(classify_site({0, 0, 1}, spec), std::out_of_range);
  CHECK_THROWS_AS(classify_site({1, 3, 1}, spec), std::out_of_range);
  CHECK_THROWS_AS(classify_site({1, 0, 4}, spec), std::out_of_range);
}

TEST_CASE("roles partition the cluster and bases match the pattern") {
  for (auto [l, d] : {std::pair{3, 3}, {5, 3}, {5, 5}, {7, 5}}) {
    const auto spec = LatticeSpec::planar(l, d);
    std::map<SiteKind, int> role_count;
    std::map<Basis, int> basis_count;
    int face_count = 0;
    for (int idx = 0; idx < spec.site_count(); ++idx) {
      const auto u = spec.site_coord(idx);
      CHECK(spec.site_index(u) == idx);
      const auto r = classify_site(u, spec);
      ++role_count[r.role];
      ++basis_count[r.basis];
      if (r.face != Face::None) ++face_count;
    }
    int total = 0;
    for (auto& [k, c] : role_count) total += c;
    CHECK(total == l * l * d);
    CHECK(role_count[SiteKind::VertexTo] ==
          (l + 1) / 2 * ((l - 1) / 2) * ((d + 1) / 2));
    CHECK(role_count[SiteKind::VertexTe] ==
          (l - 1) / 2 * ((l + 1) / 2) * ((d - 1) / 2));
    // All vertices Z-measured, all edges X-measured except the faces.
    CHECK(basis_count[Basis::MeasureZ] ==
          role_count[SiteKind::VertexTo] + role_count[SiteKind::VertexTe]);
    CHECK(basis_count[Basis::Unmeasured] == face_count);
    CHECK(face_count == 2 * ((l * l + 1) / 2));
  }
}

TEST_CASE("sector graphs match an independent parity enumeration") {
  for (auto [l, d] : {std::pair{3, 3}, {5, 3}, {3, 5}, {7, 5}}) {
    const auto spec = LatticeSpec::planar(l, d);
    for (Sector sec : {Sector::To, Sector::Te}) {
      const auto g = build_sector_graph(spec, sec);
      const SiteKind edge_kind =
          sec == Sector::To ? SiteKind::EdgeTo : SiteKind::EdgeTe;

      // Every sector-edge site appears exactly once, and nothing else does.
      std::set<int> seen;
      for (const auto& e : g.edges()) {
        CHECK(classify_site(e.site, spec).role == edge_kind);
        CHECK(seen.insert(spec.site_index(e.site)).second);
        CHECK(g.edge_id_at(e.site) ==
              static_cast<int>(&e - g.edges().data()));
      }
      int expected = 0;
      for (int idx = 0; idx < spec.site_count(); ++idx)
        if (classify_site(spec.site_coord(idx), spec).role == edge_kind)
          ++expected;
      CHECK(static_cast<int>(seen.size()) == expected);

      // Rough and excluded flags sit exactly where the construction says.
      for (const auto& e : g.edges()) {
        const Coord u = e.site;
        const bool rough_expected =
            sec == Sector::To ? (e.axis == 1 && (u.u2 == 0 || u.u2 == l - 1))
                              : (e.axis == 0 && (u.u1 == 1 || u.u1 == l));
        const bool excluded_expected =
            sec == Sector::Te && e.axis == 2 && (u.u3 == 1 || u.u3 == d);
        CHECK(e.rough == rough_expected);
        CHECK(e.excluded == excluded_expected);
        if (e.rough || e.excluded) {
          CHECK(e.a >= 0);
          CHECK(e.b == -1);
        } else {
          CHECK(e.a >= 0);
          CHECK(e.b >= 0);
        }
      }

      // Degree check against in-range neighbor counting on the cluster.
      std::vector<int> degree(g.vertex_count(), 0);
      for (const auto& e : g.edges()) {
        if (e.excluded) continue;
        if (e.a >= 0) ++degree[e.a];
        if (e.b >= 0) ++degree[e.b];
      }
      for (int v = 0; v < g.vertex_count(); ++v) {
        const Coord u = g.vertex_coord(v);
        int expected_deg = 0;
        for (const Coord n :
             {Coord{u.u1 - 1, u.u2, u.u3}, Coord{u.u1 + 1, u.u2, u.u3},
              Coord{u.u1, u.u2 - 1, u.u3}, Coord{u.u1, u.u2 + 1, u.u3},
              Coord{u.u1, u.u2, u.u3 - 1}, Coord{u.u1, u.u2, u.u3 + 1}}) {
          if (sec == Sector::To) {
            // Rough y-edges keep their in-lattice qubit at u2 = 0 or l-1.
            if (spec.contains(n) || n.u2 == -1 || n.u2 == l) {
              Coord q = n;
              q.u2 = std::clamp(q.u2, 0, l - 1);
              if (spec.contains(q) &&
                  classify_site(q, spec).role == SiteKind::EdgeTo)
                ++expected_deg;
            }
          } else {
            Coord q = n;
            q.u1 = std::clamp(q.u1, 1, l);
            if (spec.contains(q) &&
                classify_site(q, spec).role == SiteKind::EdgeTe &&
                !(q.u1 % 2 == 0 && q.u2 % 2 == 0 && (q.u3 == 1 || q.u3 == d)))
              ++expected_deg;
          }
        }
        CHECK(degree[v] == expected_deg);
      }

      // Interior degree 6.
      const auto dims = g.vertex_dims();
      for (int v = 0; v < g.vertex_count(); ++v) {
        const auto c = g.vertex_cell(v);
        bool interior = true;
        for (int ax = 0; ax < 3; ++ax)
          if (c[ax] == 0 || c[ax] == dims[ax] - 1) interior = false;
        if (interior) CHECK(degree[v] == 6);
      }
    }
  }
}

TEST_CASE("toric sector graph is a clean 3-torus") {
  const auto spec = LatticeSpec::toric(4, 4);
  const auto g = build_sector_graph(spec, Sector::To);
  CHECK(g.vertex_count() == 4 * 4 * 4);
  CHECK(g.edge_count() == 3 * g.vertex_count());
  for (const auto& e : g.edges()) {
    CHECK(!e.rough);
    CHECK(!e.excluded);
    CHECK(e.a >= 0);
    CHECK(e.b >= 0);
  }
  std::vector<int> degree(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++degree[e.a];
    ++degree[e.b];
  }
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(degree[v] == 6);
}

TEST_CASE("distances and paths agree with BFS on the explicit graph") {
  auto check_graph = [](const SectorGraph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; v += 3) {
      const auto bfs = clustersim::testing::bfs_distances(g, v);
      for (int w = 0; w < n; w += 2) {
        CHECK(g.distance(v, w) == bfs[w]);
      }
      if (g.boundary == Boundary::Planar)
        CHECK(g.boundary_distance(v) ==
              clustersim::testing::bfs_boundary_distance(g, v));
    }
    // Paths realize the distance and have the right boundary.
    for (int v = 0; v < n; v += 5)
      for (int w = 0; w < n; w += 7) {
        std::vector<int> path;
        g.append_path(v, w, path);
        CHECK(static_cast<int>(path.size()) == g.distance(v, w));
        std::map<int, int> vertex_parity;
        for (int e : path) {
          CHECK(!g.edge(e).excluded);
          for (int x : {g.edge(e).a, g.edge(e).b})
            if (x >= 0) vertex_parity[x] ^= 1;
        }
        std::set<int> odd;
        for (auto& [x, p] : vertex_parity)
          if (p) odd.insert(x);
        if (v == w)
          CHECK(odd.empty());
        else
          CHECK(odd == std::set<int>{v, w});
      }
    if (g.boundary == Boundary::Planar) {
      for (int v = 0; v < n; v += 3) {
        std::vector<int> path;
        g.append_boundary_path(v, path);
        CHECK(static_cast<int>(path.size()) == g.boundary_distance(v));
        std::map<int, int> vertex_parity;
        bool has_rough = false;
        for (int e : path) {
          has_rough |= g.edge(e).rough;
          for (int x : {g.edge(e).a, g.edge(e).b})
            if (x >= 0) vertex_parity[x] ^= 1;
        }
        CHECK(has_rough);
        std::set<int> odd;
        for (auto& [x, p] : vertex_parity)
          if (p) odd.insert(x);
        CHECK(odd == std::set<int>{v});
      }
    }
  };
  check_graph(build_sector_graph(LatticeSpec::planar(5, 5), Sector::To));
  check_graph(build_sector_graph(LatticeSpec::planar(5, 5), Sector::Te));
  check_graph(build_sector_graph(LatticeSpec::planar(5, 7), Sector::Te));
  check_graph(build_sector_graph(LatticeSpec::toric(3, 4), Sector::To));
  check_graph(build_sector_graph(LatticeSpec::toric(4, 2), Sector::Te));
}

TEST_CASE("correlator slices") {
  const auto spec = LatticeSpec::planar(3, 3);

  auto s = correlator_slice(spec, Sector::To, 2);
  std::set<Coord> got(s.sites.begin(), s.sites.end());
  CHECK(got == std::set<Coord>{{1, 2, 1}, {1, 2, 3}, {3, 2, 1}, {3, 2, 3}});

  s = correlator_slice(spec, Sector::Te, 1);
  got = std::set<Coord>(s.sites.begin(), s.sites.end());
  CHECK(got == std::set<Coord>{{1, 0, 2}, {1, 2, 2}});

  CHECK_THROWS_AS(correlator_slice(spec, Sector::To, 1), std::invalid_argument);
  CHECK_THROWS_AS(correlator_slice(spec, Sector::Te, 2), std::invalid_argument);

  // Slice members are exactly the sector edges in the matching edge plane.
  for (auto [l, d] : {std::pair{5, 5}, {7, 3}}) {
    const auto sp = LatticeSpec::planar(l, d);
    for (Sector sec : {Sector::To, Sector::Te}) {
      const auto g = build_sector_graph(sp, sec);
      const int lo = sec == Sector::To ? 0 : 1;
      for (int index = lo; index <= (sec == Sector::To ? l - 1 : l);
           index += 2) {
        const auto slice = correlator_slice(sp, sec, index);
        const int plane = sec == Sector::To ? index / 2 : (index - 1) / 2;
        std::set<int> member_ids;
        for (const auto& c : slice.sites) member_ids.insert(g.edge_id_at(c));
        std::set<int> plane_ids;
        for (int e = 0; e < g.edge_count(); ++e)
          if (g.edge_in_plane(e, plane)) plane_ids.insert(e);
        CHECK(member_ids == plane_ids);
      }
    }
  }
}

TEST_CASE("lattice spec validation") {
  CHECK_THROWS_AS(LatticeSpec::planar(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(LatticeSpec::planar(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(LatticeSpec::toric(1, 4), std::invalid_argument);
  const auto t = LatticeSpec::toric(4, 8);
  CHECK(t.l == 8);
  CHECK(t.d == 17);
  CHECK(t.toric_transverse() == 4);
  CHECK(t.toric_layers() == 8);
}
