#include "vecrel/surface_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace vecrel {

int SurfaceGraph::cw_next(int v, int e) const {
  const auto& r = rot_.at(v);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == e) return r[(i + 1) % r.size()];
  throw GraphError("edge not incident to vertex");
}

int SurfaceGraph::cw_prev(int v, int e) const {
  const auto& r = rot_.at(v);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == e) return r[(i + r.size() - 1) % r.size()];
  throw GraphError("edge not incident to vertex");
}

Dart SurfaceGraph::face_next(const Dart& d) const {
  int v = dart_head(d);
  int e = cw_prev(v, d.edge);
  return Dart{e, vertex(v).color == Color::black};
}

Dart SurfaceGraph::zigzag_next(const Dart& d) const {
  int v = dart_head(d);
  bool white = vertex(v).color == Color::white;
  int e = white ? cw_next(v, d.edge) : cw_prev(v, d.edge);
  return Dart{e, !white};
}

const Face& SurfaceGraph::infinite_face() const {
  if (infinite_face_ < 0) throw GraphError("graph has no infinite face (torus)");
  return faces_[infinite_face_];
}

std::pair<int, int> SurfaceGraph::faces_of_edge(int e) const {
  return {face_of_.at(Dart{e, true}), face_of_.at(Dart{e, false})};
}

std::vector<int> SurfaceGraph::whites() const {
  std::vector<int> r;
  for (const auto& v : vertices_)
    if (v.color == Color::white) r.push_back(v.id);
  return r;
}

std::vector<int> SurfaceGraph::blacks() const {
  std::vector<int> r;
  for (const auto& v : vertices_)
    if (v.color == Color::black) r.push_back(v.id);
  return r;
}

std::vector<int> SurfaceGraph::internal_whites() const {
  std::vector<int> r;
  for (const auto& v : vertices_)
    if (v.color == Color::white && !v.boundary) r.push_back(v.id);
  return r;
}

namespace {

// Pseudo edge ids for the sphere closure of a disk graph: the edge joining
// b_inf to boundary position p is kBInf - p.
constexpr int kBInf = -1000000;
constexpr int kBInfVertex = -1;

struct CDart {
  int edge;
  bool head_white;  // closure edges: true <=> head is the boundary vertex
  friend bool operator<(const CDart& a, const CDart& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.head_white < b.head_white;
  }
  friend bool operator==(const CDart& a, const CDart& b) {
    return a.edge == b.edge && a.head_white == b.head_white;
  }
};

}  // namespace

void SurfaceGraph::derive_faces() {
  faces_.clear();
  face_of_.clear();
  infinite_face_ = -1;

  if (surface_ == Surface::torus || boundary_order_.empty()) {
    std::set<Dart> seen;
    for (const auto& e : edges_) {
      for (bool hw : {true, false}) {
        Dart d{e.id, hw};
        if (seen.count(d)) continue;
        Face f;
        f.id = static_cast<int>(faces_.size());
        f.kind = FaceKind::internal;
        f.walks.emplace_back();
        Dart cur = d;
        do {
          seen.insert(cur);
          f.walks[0].push_back(cur);
          face_of_[cur] = f.id;
          cur = face_next(cur);
        } while (!(cur == d));
        faces_.push_back(std::move(f));
      }
    }
    long V = static_cast<long>(vertices_.size());
    long E = static_cast<long>(edges_.size());
    long F = static_cast<long>(faces_.size());
    if (surface_ == Surface::torus) {
      if (V - E + F != 0)
        throw GraphError("rotation system is not a torus embedding (V-E+F = " +
                         std::to_string(V - E + F) + ")");
      return;
    }
    if (V - E + F != 2)
      throw GraphError("rotation system is not a disk embedding (V-E+F = " +
                       std::to_string(V - E + F) + ")");
    if (!edges_.empty()) {
      Dart hint = outer_hint_ ? *outer_hint_ : Dart{edges_[0].id, true};
      infinite_face_ = face_of_.at(hint);
      faces_[infinite_face_].kind = FaceKind::infinite;
    }
    return;
  }

  // Disk with boundary vertices: trace the sphere closure through b_inf.
  // Clockwise rotation at b_inf lists the boundary positions n-1, ..., 0.
  // At a boundary vertex the closure edge is appended after the real edges,
  // so declared rotations there must run clockwise starting just after the
  // outward gap.
  const int n = static_cast<int>(boundary_order_.size());
  auto cedge = [&](int pos) { return kBInf - pos; };
  auto is_closure = [&](int e) { return e <= kBInf; };
  auto cpos = [&](int e) { return kBInf - e; };

  auto ext_rot = [&](int v) -> std::vector<int> {
    if (v == kBInfVertex) {
      std::vector<int> r(n);
      for (int i = 0; i < n; ++i) r[i] = cedge(n - 1 - i);
      return r;
    }
    std::vector<int> r = rot_.at(v);
    auto it = std::find(boundary_order_.begin(), boundary_order_.end(), v);
    if (it != boundary_order_.end()) r.push_back(cedge(static_cast<int>(it - boundary_order_.begin())));
    return r;
  };
  auto head_of = [&](const CDart& d) -> int {
    if (is_closure(d.edge)) return d.head_white ? boundary_order_[cpos(d.edge)] : kBInfVertex;
    return d.head_white ? edge(d.edge).white : edge(d.edge).black;
  };
  auto step = [&](const CDart& d) -> CDart {
    int v = head_of(d);
    std::vector<int> r = ext_rot(v);
    std::size_t i = 0;
    while (i < r.size() && r[i] != d.edge) ++i;
    if (i == r.size()) throw GraphError("rotation system inconsistency at closure");
    int e = r[(i + r.size() - 1) % r.size()];
    if (is_closure(e)) return CDart{e, v == kBInfVertex};
    int head = edge(e).black == v ? edge(e).white : edge(e).black;
    return CDart{e, vertex(head).color == Color::white};
  };

  std::vector<CDart> all;
  for (const auto& e : edges_) {
    all.push_back({e.id, true});
    all.push_back({e.id, false});
  }
  for (int p = 0; p < n; ++p) {
    all.push_back({cedge(p), true});
    all.push_back({cedge(p), false});
  }
  std::set<CDart> seen;
  std::vector<std::vector<CDart>> orbits;
  for (const auto& d0 : all) {
    if (seen.count(d0)) continue;
    std::vector<CDart> orbit;
    CDart cur = d0;
    do {
      seen.insert(cur);
      orbit.push_back(cur);
      cur = step(cur);
    } while (!(cur == d0));
    orbits.push_back(std::move(orbit));
  }

  long V = static_cast<long>(vertices_.size()) + 1;
  long E = static_cast<long>(edges_.size()) + n;
  long F = static_cast<long>(orbits.size());
  if (V - E + F != 2)
    throw GraphError("rotation system is not a disk embedding (closure V-E+F = " +
                     std::to_string(V - E + F) + ")");

  // The infinite face contains the dart leaving b_inf toward position 0.
  const CDart inf_mark{cedge(0), true};

  for (const auto& orbit : orbits) {
    Face f;
    f.id = static_cast<int>(faces_.size());
    bool touches_binf = false;
    for (const auto& d : orbit)
      if (is_closure(d.edge)) touches_binf = true;
    if (!touches_binf) {
      f.kind = FaceKind::internal;
      f.walks.emplace_back();
      for (const auto& d : orbit) f.walks[0].push_back(Dart{d.edge, d.head_white});
    } else {
      f.kind = FaceKind::external;
      if (std::find(orbit.begin(), orbit.end(), inf_mark) != orbit.end()) {
        f.kind = FaceKind::infinite;
        infinite_face_ = f.id;
      }
      std::size_t s = 0;
      while (!is_closure(orbit[s].edge)) ++s;
      std::vector<Dart> run;
      for (std::size_t i = 1; i <= orbit.size(); ++i) {
        const auto& d = orbit[(s + i) % orbit.size()];
        if (is_closure(d.edge)) {
          if (!run.empty()) {
            f.walks.push_back(run);
            run.clear();
          }
        } else {
          run.push_back(Dart{d.edge, d.head_white});
        }
      }
    }
    for (const auto& d : orbit)
      if (!is_closure(d.edge)) face_of_[Dart{d.edge, d.head_white}] = f.id;
    faces_.push_back(std::move(f));
  }
  if (infinite_face_ < 0) throw GraphError("could not identify the infinite face");
}

SurfaceGraphBuilder& SurfaceGraphBuilder::vertex(int id, Color c, bool boundary) {
  if (g_.vidx_.count(id)) throw GraphError("duplicate vertex id");
  g_.vidx_[id] = g_.vertices_.size();
  g_.vertices_.push_back({id, c, boundary});
  g_.max_vid_ = std::max(g_.max_vid_, id);
  return *this;
}

SurfaceGraphBuilder& SurfaceGraphBuilder::edge(int id, int black, int white) {
  if (g_.eidx_.count(id)) throw GraphError("duplicate edge id");
  if (!g_.vidx_.count(black) || !g_.vidx_.count(white)) throw GraphError("edge endpoint missing");
  if (g_.vertices_[g_.vidx_[black]].color != Color::black ||
      g_.vertices_[g_.vidx_[white]].color != Color::white)
    throw GraphError("edge must join a black and a white vertex");
  g_.eidx_[id] = g_.edges_.size();
  g_.edges_.push_back({id, black, white});
  g_.max_eid_ = std::max(g_.max_eid_, id);
  return *this;
}

SurfaceGraphBuilder& SurfaceGraphBuilder::rotation(int v, std::vector<int> edges) {
  declared_rot_[v] = std::move(edges);
  return *this;
}

SurfaceGraphBuilder& SurfaceGraphBuilder::boundary(std::vector<int> whites_clockwise) {
  g_.boundary_order_ = std::move(whites_clockwise);
  return *this;
}

SurfaceGraphBuilder& SurfaceGraphBuilder::outer_dart(int edge, bool head_white) {
  g_.outer_hint_ = Dart{edge, head_white};
  return *this;
}

SurfaceGraph SurfaceGraphBuilder::build() {
  std::map<int, std::vector<int>> incident;
  for (const auto& v : g_.vertices_) incident[v.id];
  for (const auto& e : g_.edges_) {
    incident[e.black].push_back(e.id);
    incident[e.white].push_back(e.id);
  }
  for (const auto& v : g_.vertices_) {
    auto it = declared_rot_.find(v.id);
    std::vector<int> r = it != declared_rot_.end() ? it->second : incident[v.id];
    auto sorted = r;
    std::sort(sorted.begin(), sorted.end());
    auto inc = incident[v.id];
    std::sort(inc.begin(), inc.end());
    if (sorted != inc)
      throw GraphError("rotation at vertex " + std::to_string(v.id) +
                       " does not list exactly the incident edges");
    if (it == declared_rot_.end() && r.size() > 2)
      throw GraphError("vertex " + std::to_string(v.id) + " of degree > 2 needs an explicit rotation");
    g_.rot_[v.id] = std::move(r);
  }

  if (g_.surface_ == Surface::torus && !g_.boundary_order_.empty())
    throw GraphError("torus graphs have no boundary");
  std::set<int> border(g_.boundary_order_.begin(), g_.boundary_order_.end());
  if (border.size() != g_.boundary_order_.size()) throw GraphError("boundary order has duplicates");
  for (const auto& v : g_.vertices_) {
    if (v.boundary) {
      if (v.color != Color::white) throw GraphError("boundary vertices must be white");
      if (!border.count(v.id)) throw GraphError("boundary vertex missing from boundary order");
    } else {
      if (border.count(v.id)) throw GraphError("boundary order lists a non-boundary vertex");
      if (g_.rot_[v.id].empty()) throw GraphError("isolated internal vertex");
    }
  }

  if (!g_.vertices_.empty()) {
    std::map<int, int> comp;
    int nc = 0;
    for (const auto& v : g_.vertices_) {
      if (comp.count(v.id)) continue;
      std::deque<int> q{v.id};
      comp[v.id] = nc;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int e : g_.rot_[u]) {
          const auto& ed = g_.edges_[g_.eidx_[e]];
          int other = ed.black == u ? ed.white : ed.black;
          if (!comp.count(other)) {
            comp[other] = nc;
            q.push_back(other);
          }
        }
      }
      ++nc;
    }
    if (g_.boundary_order_.empty()) {
      if (nc != 1) throw GraphError("graph must be connected");
    } else {
      std::set<int> reached;
      for (int b : g_.boundary_order_) reached.insert(comp[b]);
      if (static_cast<int>(reached.size()) != nc)
        throw GraphError("every component of a disk graph must contain a boundary vertex");
    }
  }

  g_.derive_faces();
  return g_;
}

ZigzagSet zigzags(const SurfaceGraph& g) {
  if (g.surface() != Surface::disk) throw GraphError("zigzags are defined for disk graphs");
  for (int b : g.boundary_order())
    if (g.degree(b) > 1) throw GraphError("zigzags require boundary vertices of degree <= 1");

  ZigzagSet zs;
  const int n = static_cast<int>(g.boundary_order().size());
  std::set<Dart> used;
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[g.boundary_order()[i]] = i;

  for (int i = 0; i < n; ++i) {
    int j = g.boundary_order()[i];
    Zigzag z;
    z.start = j;
    if (g.degree(j) == 0) {
      z.end = j;
    } else {
      Dart d{g.rotation(j)[0], false};
      for (;;) {
        z.darts.push_back(d);
        used.insert(d);
        int head = g.dart_head(d);
        if (g.vertex(head).boundary) {
          z.end = head;
          break;
        }
        d = g.zigzag_next(d);
      }
    }
    zs.zigzags.push_back(std::move(z));
  }
  zs.trip.resize(n);
  for (int i = 0; i < n; ++i) zs.trip[i] = pos.at(zs.zigzags[i].end);

  for (const auto& e : g.edges()) {
    for (bool hw : {true, false}) {
      Dart d{e.id, hw};
      if (used.count(d)) continue;
      Zigzag z;
      z.cycle = true;
      Dart cur = d;
      do {
        z.darts.push_back(cur);
        used.insert(cur);
        cur = g.zigzag_next(cur);
      } while (!(cur == d));
      zs.cycles.push_back(std::move(z));
    }
  }
  return zs;
}

bool is_reduced(const SurfaceGraph& g) {
  ZigzagSet zs = zigzags(g);
  if (!zs.cycles.empty()) return false;
  for (const auto& z : zs.zigzags) {
    if (z.darts.size() <= 2) continue;
    std::set<Dart> mine(z.darts.begin(), z.darts.end());
    for (const auto& d : z.darts)
      if (mine.count(d.reversed())) return false;
  }
  for (std::size_t a = 0; a < zs.zigzags.size(); ++a) {
    std::map<int, std::size_t> apos;
    for (std::size_t i = 0; i < zs.zigzags[a].darts.size(); ++i)
      apos[zs.zigzags[a].darts[i].edge] = i;
    for (std::size_t b = a + 1; b < zs.zigzags.size(); ++b) {
      std::vector<std::pair<std::size_t, std::size_t>> hits;
      const auto& zb = zs.zigzags[b].darts;
      for (std::size_t i = 0; i < zb.size(); ++i) {
        auto it = apos.find(zb[i].edge);
        if (it == apos.end()) continue;
        if (zs.zigzags[a].darts[it->second] == zb[i].reversed()) hits.push_back({it->second, i});
      }
      std::sort(hits.begin(), hits.end());
      for (std::size_t i = 1; i < hits.size(); ++i)
        if (hits[i].second > hits[i - 1].second) return false;
    }
  }
  return true;
}

std::vector<bool> faces_left_of_zigzag(const SurfaceGraph& g, const Zigzag& z) {
  const std::size_t nf = g.faces().size();
  if (z.darts.empty()) return std::vector<bool>(nf, true);
  if (z.darts.size() == 2 && z.darts[0].edge == z.darts[1].edge) return std::vector<bool>(nf, false);

  std::set<int> zedges;
  for (const auto& d : z.darts) zedges.insert(d.edge);

  std::vector<int> side(nf, -1);  // 0 right, 1 left
  std::deque<int> queue;
  auto set_side = [&](int f, int s) {
    if (side[f] == -1) {
      side[f] = s;
      queue.push_back(f);
    } else if (side[f] != s) {
      throw GraphError("zigzag side flood fill inconsistent (graph not reduced?)");
    }
  };
  for (const auto& d : z.darts) {
    set_side(g.face_id_right_of(d), 0);
    set_side(g.face_id_right_of(d.reversed()), 1);
  }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (const auto& walk : g.faces()[f].walks)
      for (const auto& d : walk) {
        if (zedges.count(d.edge)) continue;
        set_side(g.face_id_right_of(d.reversed()), side[f]);
      }
  }
  std::vector<bool> left(nf, false);
  for (std::size_t i = 0; i < nf; ++i) left[i] = side[i] == 1;
  return left;
}

std::vector<Face> derive_faces(const SurfaceGraph& g) { return g.faces(); }

std::string SurfaceGraph::to_dot() const {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : vertices_) {
    os << "  v" << v.id << " [shape=circle,style=filled,fillcolor="
       << (v.color == Color::black ? "black,fontcolor=white" : "white") << ",label=\"" << v.id
       << (v.boundary ? "*" : "") << "\"];\n";
  }
  for (const auto& e : edges_) os << "  v" << e.black << " -- v" << e.white << " [label=\"e" << e.id << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace vecrel
