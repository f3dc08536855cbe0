#pragma once

#include "vecrel/surface_graph.hpp"

namespace vecrel {

// The standard plabic graph for the open cell of Gr(2,4): boundary whites
// 1..4, black 5 ~ {2,3,4}, black 6 ~ {1,2,4}. Boundary vertices 2 and 4 have
// degree 2.
SurfaceGraph gr24();

// The plabic graph for the open cell of Gr(3,6): boundary whites 1..6, one
// internal white 7, blacks 11 ~ {1,2,7}, 12 ~ {2,3,4,7}, 13 ~ {4,5,7},
// 14 ~ {5,6,1,7}. Boundary vertices 1,2,4,5 have degree 2.
SurfaceGraph gr36();

// The plabic graph whose boundary restriction maps onto the Schubert variety
// {D_12 = 0} in Gr(2,4): boundary whites 1..4 (degree 1), internal white 7,
// blacks 5 ~ {1,7}, 6 ~ {2,7}, 8 ~ {3,4,7}.
SurfaceGraph fig10();

// Splits every boundary vertex of degree >= 2 into a degree-1 boundary white
// joined through a new degree-2 black to an internal white that carries the
// old edges. Returns the new graph plus the id of the internal copy of each
// split boundary vertex (identity for untouched ones).
struct BoundarySplit {
  SurfaceGraph graph;
  std::map<int, int> internal_copy;  // boundary id -> internal white id
  std::map<int, int> split_black;    // boundary id -> new black id (if split)
};
BoundarySplit split_boundary(const SurfaceGraph& g);

// Torus quotient of the square grid by the lattice <(-3,1),(2n,0)>; vertices
// are Z_{2n} with whites even. Carrier of pentagram-map dynamics. Edge ids:
// x -- x+1 has id x, x -- x+3 has id 2n + x (n >= 4).
SurfaceGraph pentagram_torus(int n);

// Square-grid window 0..side-1 in both coordinates: whites at even parity,
// blacks at odd parity with all four neighbors inside. Whites with no
// incident edge are dropped. Vertex id = 100*(i+1) + (j+1); edge id encodes
// the black endpoint and direction.
SurfaceGraph laplace_patch(int side);

// A graph with a doubled edge between the same black/white pair (2-gon face),
// hanging off one boundary vertex. Minimal non-reduced example.
SurfaceGraph doubled_edge_graph();

}  // namespace vecrel
