#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vecrel {

enum class Color : std::uint8_t { black, white };
enum class Surface : std::uint8_t { disk, torus };
enum class FaceKind : std::uint8_t { internal, external, infinite };

struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// A directed edge. Each edge joins a black and a white vertex, so the head
// color determines the direction.
struct Dart {
  int edge = -1;
  bool head_white = false;

  friend bool operator==(const Dart& a, const Dart& b) {
    return a.edge == b.edge && a.head_white == b.head_white;
  }
  friend bool operator<(const Dart& a, const Dart& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.head_white < b.head_white;
  }
  Dart reversed() const { return Dart{edge, !head_white}; }
};

struct Face {
  int id = -1;
  FaceKind kind = FaceKind::internal;
  // Internal faces: the full closed walk, clockwise, one dart per edge
  // traversal. External faces: the real-edge walks only, one vector per
  // maximal walk between boundary touches.
  std::vector<std::vector<Dart>> walks;

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& w : walks) n += w.size();
    return n;
  }
};

struct Zigzag {
  int start = -1;  // boundary vertex id, or -1 for an internal cycle
  int end = -1;
  bool cycle = false;
  std::vector<Dart> darts;
};

// Planar bipartite multigraph with a rotation system (clockwise edge order
// at each vertex) embedding it in a disk or torus. Immutable once built.
class SurfaceGraph {
 public:
  struct VertexInfo {
    int id;
    Color color;
    bool boundary;
  };
  struct EdgeInfo {
    int id;
    int black;
    int white;
  };

  Surface surface() const { return surface_; }
  const std::vector<VertexInfo>& vertices() const { return vertices_; }
  const std::vector<EdgeInfo>& edges() const { return edges_; }
  const std::vector<int>& boundary_order() const { return boundary_order_; }

  bool has_vertex(int v) const { return vidx_.count(v) != 0; }
  const VertexInfo& vertex(int v) const { return vertices_[vidx_.at(v)]; }
  const EdgeInfo& edge(int e) const { return edges_[eidx_.at(e)]; }
  bool has_edge(int e) const { return eidx_.count(e) != 0; }
  const std::vector<int>& rotation(int v) const { return rot_.at(v); }
  std::size_t degree(int v) const { return rot_.at(v).size(); }

  int dart_head(const Dart& d) const { return d.head_white ? edge(d.edge).white : edge(d.edge).black; }
  int dart_tail(const Dart& d) const { return d.head_white ? edge(d.edge).black : edge(d.edge).white; }

  // Clockwise-next / -previous edge around v after edge e.
  int cw_next(int v, int e) const;
  int cw_prev(int v, int e) const;

  // Face to the right of d is traced by repeatedly taking this step.
  Dart face_next(const Dart& d) const;
  // Zigzag step: turn maximally left at white heads, maximally right at
  // black heads.
  Dart zigzag_next(const Dart& d) const;

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face_right_of(const Dart& d) const { return faces_[face_of_.at(d)]; }
  int face_id_right_of(const Dart& d) const { return face_of_.at(d); }
  const Face& infinite_face() const;

  // The two face ids on either side of an edge (right of each dart).
  std::pair<int, int> faces_of_edge(int e) const;

  int max_vertex_id() const { return max_vid_; }
  int max_edge_id() const { return max_eid_; }

  std::vector<int> whites() const;
  std::vector<int> blacks() const;
  std::vector<int> internal_whites() const;
  std::size_t boundary_count() const { return boundary_order_.size(); }

  // Zigzag starting at boundary vertex j, or the cycle through a dart.
  Zigzag trace_zigzag_from_boundary(int j) const;

  std::string to_dot() const;

  friend class SurfaceGraphBuilder;

 private:
  Surface surface_ = Surface::disk;
  std::vector<VertexInfo> vertices_;
  std::vector<EdgeInfo> edges_;
  std::map<int, std::size_t> vidx_, eidx_;
  std::map<int, std::vector<int>> rot_;
  std::vector<int> boundary_order_;
  std::vector<Face> faces_;
  std::map<Dart, int> face_of_;
  int infinite_face_ = -1;
  int max_vid_ = -1, max_eid_ = -1;
  std::optional<Dart> outer_hint_;

  void derive_faces();
};

class SurfaceGraphBuilder {
 public:
  explicit SurfaceGraphBuilder(Surface s) { g_.surface_ = s; }

  SurfaceGraphBuilder& vertex(int id, Color c, bool boundary = false);
  SurfaceGraphBuilder& edge(int id, int black, int white);
  // Clockwise order of incident edge ids, as drawn.
  SurfaceGraphBuilder& rotation(int v, std::vector<int> edges);
  SurfaceGraphBuilder& boundary(std::vector<int> whites_clockwise);
  // For disk graphs with no boundary vertices: a dart on the infinite face.
  SurfaceGraphBuilder& outer_dart(int edge, bool head_white);

  SurfaceGraph build();

 private:
  SurfaceGraph g_;
  std::map<int, std::vector<int>> declared_rot_;
};

// Per-operation results shared with the plabic layer.
struct ZigzagSet {
  std::vector<Zigzag> zigzags;    // index i = boundary position i (0-based)
  std::vector<int> trip;          // trip[i] = boundary position of the end of zigzag i
  std::vector<Zigzag> cycles;     // internal cycles, if any
};

std::vector<Face> derive_faces(const SurfaceGraph& g);

// Requires a disk graph whose boundary vertices all have degree <= 1.
ZigzagSet zigzags(const SurfaceGraph& g);

bool is_reduced(const SurfaceGraph& g);

// For each face id, whether the face lies (strictly) left of the given
// boundary zigzag. Corner conventions: a zigzag through a degree-1 black has
// every face on its right; an empty zigzag has every face on its left.
std::vector<bool> faces_left_of_zigzag(const SurfaceGraph& g, const Zigzag& z);

}  // namespace vecrel
