#pragma once

#include <string>
#include <vector>

#include "garside/cell_complex.hpp"

namespace garside {

/// Nearest/farthest vertex maps w(v,e) over (vertex, cell) pairs.
/// A slot holds -1 when the extremum is not unique.
struct HemisphereMaps {
  std::vector<std::vector<Vertex>> nearest;   // [cell][vertex index]
  std::vector<std::vector<Vertex>> farthest;  // [cell][vertex index]
  std::vector<Vertex> vertex_cells;           // index -> vertex id
  std::vector<int> vertex_index;              // vertex id -> index

  bool total() const;
  Vertex raw_nearest(Cell e, Vertex v) const { return nearest[e][vertex_index[v]]; }
  Vertex raw_farthest(Cell e, Vertex v) const { return farthest[e][vertex_index[v]]; }
};

HemisphereMaps compute_hemisphere_maps(const CellComplex& q);

/// The unique d-minimizer of V(e) seen from v. Throws Tie when not unique.
Vertex nearest_vertex(const CellComplex& q, const HemisphereMaps& m, Vertex v, Cell e);
Vertex farthest_vertex(const CellComplex& q, const HemisphereMaps& m, Vertex v, Cell e);
Vertex nearest_vertex(const CellComplex& q, Vertex v, Cell e);
Vertex farthest_vertex(const CellComplex& q, Vertex v, Cell e);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct MhReport {
  CheckResult qmh;
  CheckResult lmh;
  CheckResult mh;
  CheckResult additive_identity;
};

/// Uniqueness of the hemisphere maps plus the compatibility identities
///   nearest(v,e') = nearest(nearest(v,e),e') = farthest(farthest(v,e),e')
///   farthest(v,e') = nearest(farthest(v,e),e') = farthest(nearest(v,e),e')
/// for all v, e and e' in Q(e). Cross-validated against the equivalent
/// additive identity d(v,far(v,e)) = d(v,w) + d(w,far(v,e)) for w in V(e).
CheckResult check_qmh(const CellComplex& q);
CheckResult check_qmh(const CellComplex& q, const HemisphereMaps& m);

/// Every closed cell, with its own skeleton metric, is QMH, and the local
/// maps of overlapping cells agree on shared faces.
CheckResult check_lmh(const CellComplex& q);

/// Full report: QMH, LMH, and agreement of global with cell-local maps.
MhReport check_mh(const CellComplex& q);

/// Order-2 automorphism of the 1-skeleton sending every vertex to its unique
/// globally farthest vertex, with d(v,phi(v)) = d(v,w) + d(w,phi(v)) for all w.
struct Involution {
  std::vector<Vertex> image;  // indexed by vertex id (cell id); -1 for non-vertices
  Vertex operator()(Vertex v) const { return image[v]; }
};

Involution find_involution(const CellComplex& q);  // throws NotInvolutive

}  // namespace garside
