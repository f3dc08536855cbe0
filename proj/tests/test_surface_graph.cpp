#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "vecrel/builtin_graphs.hpp"
#include "vecrel/surface_graph.hpp"

using namespace vecrel;

namespace {

int count_kind(const SurfaceGraph& g, FaceKind k) {
  int n = 0;
  for (const auto& f : g.faces())
    if (f.kind == k) ++n;
  return n;
}

}  // namespace

TEST_CASE("four-cycle on a disk: one internal quadrilateral and one outer face") {
  SurfaceGraphBuilder b(Surface::disk);
  b.vertex(1, Color::white).vertex(2, Color::white);
  b.vertex(3, Color::black).vertex(4, Color::black);
  b.edge(1, 3, 1).edge(2, 3, 2).edge(3, 4, 2).edge(4, 4, 1);
  b.rotation(1, {1, 4}).rotation(2, {3, 2}).rotation(3, {1, 2}).rotation(4, {3, 4});
  SurfaceGraph g = b.build();
  CHECK(g.faces().size() == 2);
  CHECK(count_kind(g, FaceKind::internal) == 1);
  CHECK(count_kind(g, FaceKind::infinite) == 1);
  for (const auto& f : g.faces())
    if (f.kind == FaceKind::internal) CHECK(f.edge_count() == 4);
}

TEST_CASE("gr24: one internal quad, four external faces, infinite between 4 and 1") {
  SurfaceGraph g = gr24();
  CHECK(count_kind(g, FaceKind::internal) == 1);
  CHECK(count_kind(g, FaceKind::external) + count_kind(g, FaceKind::infinite) == 4);
  CHECK(count_kind(g, FaceKind::infinite) == 1);
  // The infinite face's walk runs from boundary vertex 1 to 4 (or is split
  // accordingly); it must touch whites 1 and 4.
  std::set<int> touched;
  for (const auto& w : g.infinite_face().walks)
    for (const auto& d : w) {
      touched.insert(g.dart_head(d));
      touched.insert(g.dart_tail(d));
    }
  CHECK(touched.count(1) == 1);
  CHECK(touched.count(4) == 1);
  CHECK(touched.count(2) == 0);
}

TEST_CASE("gr36: 4 internal faces + 6 external faces") {
  SurfaceGraph g = gr36();
  CHECK(count_kind(g, FaceKind::internal) == 4);
  CHECK(count_kind(g, FaceKind::external) + count_kind(g, FaceKind::infinite) == 6);
  for (const auto& f : g.faces())
    if (f.kind == FaceKind::internal) CHECK(f.edge_count() == 4);
}

TEST_CASE("fig10 is a tree: no internal faces") {
  SurfaceGraph g = fig10();
  CHECK(count_kind(g, FaceKind::internal) == 0);
  CHECK(g.faces().size() == 4);
}

TEST_CASE("pentagram torus n=5: all ten faces are quadrilaterals") {
  SurfaceGraph g = pentagram_torus(5);
  CHECK(g.faces().size() == 10);
  for (const auto& f : g.faces()) CHECK(f.edge_count() == 4);
}

TEST_CASE("inconsistent rotation system is rejected") {
  SurfaceGraphBuilder b(Surface::torus);
  b.vertex(0, Color::white).vertex(1, Color::black);
  b.edge(0, 1, 0).edge(1, 1, 0);
  // A 2-cycle on the torus would need V-E+F=0, but tracing gives F=2.
  CHECK_THROWS_AS(b.build(), GraphError);
}

TEST_CASE("rotation rebuilt from face walks equals the stored rotation") {
  for (const SurfaceGraph& g : {gr24(), gr36(), pentagram_torus(5)}) {
    // cw_prev at the head of each dart is the edge of the next dart in its
    // face walk; rebuild each vertex's cyclic order from that successor map.
    std::map<int, std::map<int, int>> prev_at;  // vertex -> e -> cw_prev(e)
    for (const auto& f : g.faces())
      for (const auto& walk : f.walks)
        for (std::size_t i = 0; i < walk.size(); ++i) {
          const Dart& d = walk[i];
          Dart nd = g.face_next(d);
          prev_at[g.dart_head(d)][d.edge] = nd.edge;
        }
    for (const auto& v : g.vertices()) {
      const auto& rot = g.rotation(v.id);
      if (rot.size() <= 1) continue;
      auto it = prev_at.find(v.id);
      if (it == prev_at.end()) continue;  // boundary vertices on external faces only
      if (it->second.size() != rot.size()) continue;
      std::vector<int> cycle;
      int e = rot[0];
      for (std::size_t i = 0; i < rot.size(); ++i) {
        cycle.push_back(e);
        e = it->second.at(e);
      }
      // cycle lists edges in cw_prev order = counterclockwise; reverse it.
      std::vector<int> ccw(cycle.rbegin(), cycle.rend());
      std::rotate(ccw.begin(), std::find(ccw.begin(), ccw.end(), rot[0]), ccw.end());
      CHECK(ccw == rot);
    }
  }
}

TEST_CASE("zigzags on fig10: trip permutation and dart coverage") {
  SurfaceGraph g = fig10();
  ZigzagSet zs = zigzags(g);
  REQUIRE(zs.zigzags.size() == 4);
  CHECK(zs.cycles.empty());
  CHECK(zs.zigzags[0].end == 2);
  CHECK(zs.zigzags[1].end == 4);
  CHECK(zs.zigzags[2].end == 1);
  CHECK(zs.zigzags[3].end == 3);
  // Every directed edge lies on exactly one zigzag.
  std::map<Dart, int> cover;
  for (const auto& z : zs.zigzags)
    for (const auto& d : z.darts) cover[d]++;
  CHECK(cover.size() == 2 * g.edges().size());
  for (const auto& [d, c] : cover) CHECK(c == 1);
}

TEST_CASE("zigzags on the split gr36: trip permutation is i -> i+3") {
  BoundarySplit s = split_boundary(gr36());
  ZigzagSet zs = zigzags(s.graph);
  REQUIRE(zs.trip.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(zs.trip[i] == (i + 3) % 6);
  CHECK(is_reduced(s.graph));
}

TEST_CASE("zigzags on the split gr24: trip permutation is i -> i+2") {
  BoundarySplit s = split_boundary(gr24());
  ZigzagSet zs = zigzags(s.graph);
  REQUIRE(zs.trip.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(zs.trip[i] == (i + 2) % 4);
  CHECK(is_reduced(s.graph));
}

TEST_CASE("degree-1 black corner: zigzag goes out and back; isolated vertex: empty zigzag") {
  SurfaceGraphBuilder b(Surface::disk);
  b.vertex(1, Color::white, true).vertex(2, Color::white, true);
  b.vertex(3, Color::black);
  b.edge(1, 3, 1);
  b.boundary({1, 2});
  SurfaceGraph g = b.build();
  ZigzagSet zs = zigzags(g);
  CHECK(zs.zigzags[0].darts.size() == 2);
  CHECK(zs.zigzags[0].end == 1);
  CHECK(zs.zigzags[1].darts.empty());
  CHECK(zs.zigzags[1].end == 2);
  CHECK(zs.trip[0] == 0);
  CHECK(zs.trip[1] == 1);
  // Corner conventions for face sides.
  auto left0 = faces_left_of_zigzag(g, zs.zigzags[0]);
  auto left1 = faces_left_of_zigzag(g, zs.zigzags[1]);
  for (bool x : left0) CHECK_FALSE(x);
  for (bool x : left1) CHECK(x);
}

TEST_CASE("doubled edge graph is not reduced") {
  CHECK_FALSE(is_reduced(doubled_edge_graph()));
}

TEST_CASE("internal zigzag cycle makes the graph non-reduced") {
  // 4-cycle with a pendant to the boundary: the 4-cycle produces zigzag
  // cycles.
  SurfaceGraphBuilder b(Surface::disk);
  b.vertex(1, Color::white, true);
  b.vertex(2, Color::white).vertex(3, Color::white);
  b.vertex(4, Color::black).vertex(5, Color::black);
  b.edge(1, 4, 1);
  b.edge(2, 4, 2).edge(3, 5, 2).edge(4, 5, 3).edge(5, 4, 3);
  b.rotation(4, {1, 2, 5}).rotation(2, {2, 3}).rotation(5, {3, 4}).rotation(3, {4, 5});
  b.boundary({1});
  SurfaceGraph g = b.build();
  ZigzagSet zs = zigzags(g);
  CHECK_FALSE(zs.cycles.empty());
  CHECK_FALSE(is_reduced(g));
}

TEST_CASE("laplace patch builds and has only quadrilateral internal faces") {
  SurfaceGraph g = laplace_patch(7);
  int quads = 0;
  for (const auto& f : g.faces())
    if (f.kind == FaceKind::internal) {
      CHECK(f.edge_count() == 4);
      ++quads;
    }
  CHECK(quads > 0);
}
