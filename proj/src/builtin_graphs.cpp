#include "vecrel/builtin_graphs.hpp"

#include <algorithm>

namespace vecrel {

SurfaceGraph gr24() {
  SurfaceGraphBuilder b(Surface::disk);
  for (int i = 1; i <= 4; ++i) b.vertex(i, Color::white, true);
  b.vertex(5, Color::black);  // lower, ~ {2,3,4}
  b.vertex(6, Color::black);  // upper, ~ {1,2,4}
  b.edge(1, 5, 2).edge(2, 5, 3).edge(3, 5, 4);
  b.edge(4, 6, 1).edge(5, 6, 2).edge(6, 6, 4);
  b.rotation(5, {1, 2, 3});
  b.rotation(6, {4, 5, 6});
  b.rotation(1, {4});
  b.rotation(2, {1, 5});
  b.rotation(3, {2});
  b.rotation(4, {6, 3});
  b.boundary({1, 2, 3, 4});
  return b.build();
}

SurfaceGraph gr36() {
  SurfaceGraphBuilder b(Surface::disk);
  for (int i = 1; i <= 6; ++i) b.vertex(i, Color::white, true);
  b.vertex(7, Color::white);  // internal
  for (int i : {11, 12, 13, 14}) b.vertex(i, Color::black);
  b.edge(1, 11, 1).edge(2, 11, 2).edge(3, 11, 7);
  b.edge(4, 12, 2).edge(5, 12, 3).edge(6, 12, 4).edge(7, 12, 7);
  b.edge(8, 13, 4).edge(9, 13, 5).edge(10, 13, 7);
  b.edge(11, 14, 5).edge(12, 14, 6).edge(13, 14, 1).edge(14, 14, 7);
  b.rotation(7, {3, 7, 10, 14});
  b.rotation(11, {2, 3, 1});
  b.rotation(12, {4, 5, 6, 7});
  b.rotation(13, {10, 8, 9});
  b.rotation(14, {13, 14, 11, 12});
  b.rotation(1, {1, 13});
  b.rotation(2, {4, 2});
  b.rotation(3, {5});
  b.rotation(4, {8, 6});
  b.rotation(5, {11, 9});
  b.rotation(6, {12});
  b.boundary({1, 2, 3, 4, 5, 6});
  return b.build();
}

SurfaceGraph fig10() {
  SurfaceGraphBuilder b(Surface::disk);
  for (int i = 1; i <= 4; ++i) b.vertex(i, Color::white, true);
  b.vertex(7, Color::white);
  b.vertex(5, Color::black).vertex(6, Color::black).vertex(8, Color::black);
  b.edge(1, 5, 1).edge(2, 5, 7);
  b.edge(3, 6, 2).edge(4, 6, 7);
  b.edge(5, 8, 3).edge(6, 8, 4).edge(7, 8, 7);
  b.rotation(7, {2, 4, 7});
  b.rotation(8, {7, 5, 6});
  b.boundary({1, 2, 3, 4});
  return b.build();
}

BoundarySplit split_boundary(const SurfaceGraph& g) {
  if (g.surface() != Surface::disk) throw GraphError("split_boundary needs a disk graph");
  SurfaceGraphBuilder b(Surface::disk);
  BoundarySplit out{SurfaceGraph{}, {}, {}};
  int next_v = g.max_vertex_id() + 1;
  int next_e = g.max_edge_id() + 1;

  std::map<int, int> internal_copy;
  std::map<int, int> split_black;
  std::map<int, int> outer_edge, inner_edge;
  for (int j : g.boundary_order()) {
    if (g.degree(j) >= 2) {
      internal_copy[j] = next_v++;
      split_black[j] = next_v++;
      outer_edge[j] = next_e++;
      inner_edge[j] = next_e++;
    } else {
      internal_copy[j] = j;
    }
  }
  for (const auto& v : g.vertices()) b.vertex(v.id, v.color, v.boundary);
  for (const auto& [j, copy] : internal_copy) {
    if (copy == j) continue;
    b.vertex(copy, Color::white, false);
    b.vertex(split_black.at(j), Color::black, false);
  }
  for (const auto& e : g.edges()) {
    int w = e.white;
    auto it = internal_copy.find(w);
    if (it != internal_copy.end() && it->second != w) w = it->second;
    b.edge(e.id, e.black, w);
  }
  for (const auto& [j, t] : split_black) {
    b.edge(outer_edge.at(j), t, j);
    b.edge(inner_edge.at(j), t, internal_copy.at(j));
  }

  for (const auto& v : g.vertices()) {
    if (split_black.count(v.id)) {
      int j = v.id;
      b.rotation(j, {outer_edge.at(j)});
      // The new black sits between j and its copy; the copy keeps the old
      // clockwise rotation with the inner link appended in the outward gap.
      std::vector<int> r = g.rotation(j);
      r.push_back(inner_edge.at(j));
      b.rotation(internal_copy.at(j), r);
      b.rotation(split_black.at(j), {outer_edge.at(j), inner_edge.at(j)});
    } else {
      b.rotation(v.id, g.rotation(v.id));
    }
  }
  b.boundary(g.boundary_order());
  out.graph = b.build();
  out.internal_copy = internal_copy;
  out.split_black = split_black;
  return out;
}

SurfaceGraph pentagram_torus(int n) {
  if (n < 4) throw GraphError("pentagram torus needs n >= 4");
  const int m = 2 * n;
  SurfaceGraphBuilder b(Surface::torus);
  for (int x = 0; x < m; ++x) b.vertex(x, x % 2 == 0 ? Color::white : Color::black);
  auto e1 = [&](int x) { return ((x % m) + m) % m; };            // x -- x+1
  auto e3 = [&](int x) { return m + ((x % m) + m) % m; };        // x -- x+3
  for (int x = 0; x < m; ++x) {
    int black = x % 2 == 1 ? x : (x + 1) % m;
    int white = x % 2 == 0 ? x : (x + 1) % m;
    b.edge(e1(x), black, white);
  }
  for (int x = 0; x < m; ++x) {
    int y = (x + 3) % m;
    int black = x % 2 == 1 ? x : y;
    int white = x % 2 == 0 ? x : y;
    b.edge(e3(x), black, white);
  }
  for (int x = 0; x < m; ++x) {
    // clockwise (N, E, S, W) = (x--x+3, x--x+1, x-3--x, x-1--x)
    b.rotation(x, {e3(x), e1(x), e3(x - 3), e1(x - 1)});
  }
  return b.build();
}

SurfaceGraph laplace_patch(int side) {
  if (side < 5) throw GraphError("laplace patch needs side >= 5");
  SurfaceGraphBuilder b(Surface::disk);
  auto vid = [&](int i, int j) { return 100 * (i + 1) + (j + 1); };
  auto inside = [&](int i, int j) { return i >= 0 && j >= 0 && i < side && j < side; };
  auto interior_black = [&](int i, int j) {
    return inside(i, j) && (i + j) % 2 == 1 && i >= 1 && j >= 1 && i < side - 1 && j < side - 1;
  };
  // Edge from black (i,j) in direction d (0=N,1=E,2=S,3=W): id = 4*vid+d.
  const int di[4] = {0, 1, 0, -1};
  const int dj[4] = {1, 0, -1, 0};
  auto eid = [&](int i, int j, int d) { return 4 * vid(i, j) + d; };

  std::map<int, std::vector<int>> white_dirs;  // white vid -> incident edges by direction
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if ((i + j) % 2 == 0) continue;
      if (!interior_black(i, j)) continue;
      for (int d = 0; d < 4; ++d) white_dirs[vid(i + di[d], j + dj[d])].push_back(0);
    }
  // Whites adjacent to at least one interior black.
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if ((i + j) % 2 != 0) continue;
      bool any = false;
      for (int d = 0; d < 4 && !any; ++d) any = interior_black(i + di[d], j + dj[d]);
      if (any) b.vertex(vid(i, j), Color::white, false);
    }
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      if (interior_black(i, j)) b.vertex(vid(i, j), Color::black, false);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (!interior_black(i, j)) continue;
      for (int d = 0; d < 4; ++d) b.edge(eid(i, j, d), vid(i, j), vid(i + di[d], j + dj[d]));
      b.rotation(vid(i, j), {eid(i, j, 0), eid(i, j, 1), eid(i, j, 2), eid(i, j, 3)});
    }
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if ((i + j) % 2 != 0) continue;
      std::vector<int> rot;
      // Edge to black neighbor in direction d has id eid(black, opposite(d)).
      const int opp[4] = {2, 3, 0, 1};
      for (int d = 0; d < 4; ++d) {
        int bi = i + di[d], bj = j + dj[d];
        if (interior_black(bi, bj)) rot.push_back(eid(bi, bj, opp[d]));
      }
      if (!rot.empty()) b.rotation(vid(i, j), rot);
    }
  // Outer face hint: black (1,2) or (2,1) exists for side >= 5; use its west
  // or south edge pointing at the rim.
  int hi = 1, hj = 2;
  if (!interior_black(hi, hj)) {
    hi = 2;
    hj = 1;
  }
  b.outer_dart(eid(hi, hj, 3), true);
  return b.build();
}

SurfaceGraph doubled_edge_graph() {
  SurfaceGraphBuilder b(Surface::disk);
  b.vertex(1, Color::white, true);
  b.vertex(2, Color::black);
  b.vertex(3, Color::white);
  b.edge(1, 2, 1).edge(2, 2, 3).edge(3, 2, 3);
  b.rotation(2, {1, 2, 3});
  b.rotation(3, {2, 3});
  b.boundary({1});
  return b.build();
}

}  // namespace vecrel
