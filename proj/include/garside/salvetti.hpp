#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "garside/cell_complex.hpp"
#include "garside/mh.hpp"

namespace garside {

/// Salvetti complex of a QMH complex: one cell <e;v> per (cell of Q, vertex
/// of e), attached along nearest-vertex data. Each 1-cell <e;v> is oriented
/// with source v. 0-cells correspond bijectively to the 0-cells of Q.
struct SalvettiComplex {
  CellComplex complex;
  std::shared_ptr<const CellComplex> base_complex;
  std::vector<Cell> base;  // sal cell -> cell of Q (the projection psi)
  std::vector<Vertex> apex;
  std::map<std::pair<Cell, Vertex>, Cell> index;  // (base, apex) -> sal cell

  Cell sal_cell(Cell q_cell, Vertex v) const;
  Cell project(Cell sal_cell) const;  // UnknownCell
  /// Source/target vertices (as Q-vertex ids) of an oriented 1-cell.
  std::pair<Vertex, Vertex> edge_source_target(Cell sal_cell) const;
  /// Sal 0-cell id of a Q vertex and back.
  Cell vertex_cell(Vertex q_vertex) const;
  Vertex vertex_of_cell(Cell sal_vertex) const;
};

/// Builds Sal(Q) by the inductive attaching rule
///   boundary(<e;v>) = { <e'; nearest(v,e')> : e' in Q(e) \ {e} }.
/// Requires a QMH complex; throws NotQmh otherwise.
SalvettiComplex build_salvetti(const CellComplex& q, const HemisphereMaps& maps);
SalvettiComplex build_salvetti(const CellComplex& q);

/// Positive paths of Sal(Q) are identified with vertex walks of Q: each step
/// v -> w lifts to the unique outgoing 1-cell over an edge {v,w}.
using VertexPath = std::vector<Vertex>;

/// The opposite path: traverses the same edges in reverse order, each with
/// the positive orientation based at its other endpoint. On vertex walks
/// this is reversal. Throws NotPositive if consecutive vertices are not
/// adjacent in Q.
VertexPath opposite_path(const CellComplex& q, const VertexPath& path);

/// Serializes in the complex file format with ids rendered <base>@<apex>.
void save_salvetti(const SalvettiComplex& s, std::ostream& out);

}  // namespace garside
