#include "garside/salvetti.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace garside {

Cell SalvettiComplex::sal_cell(Cell q_cell, Vertex v) const {
  auto it = index.find({q_cell, v});
  if (it == index.end())
    fail(Errc::UnknownCell, "no Salvetti cell <" + std::to_string(q_cell) + ";" + std::to_string(v) + ">");
  return it->second;
}

Cell SalvettiComplex::project(Cell sal) const {
  if (sal < 0 || sal >= static_cast<Cell>(base.size())) fail(Errc::UnknownCell, "cell id " + std::to_string(sal));
  return base[static_cast<std::size_t>(sal)];
}

std::pair<Vertex, Vertex> SalvettiComplex::edge_source_target(Cell sal) const {
  if (complex.dim(sal) != 1) fail(Errc::UnknownCell, "cell " + std::to_string(sal) + " is not a 1-cell");
  Vertex src = apex[static_cast<std::size_t>(sal)];
  auto [a, b] = base_complex->edge_endpoints(base[static_cast<std::size_t>(sal)]);
  return {src, a == src ? b : a};
}

Cell SalvettiComplex::vertex_cell(Vertex q_vertex) const { return sal_cell(q_vertex, q_vertex); }

Vertex SalvettiComplex::vertex_of_cell(Cell sal_vertex) const {
  if (complex.dim(sal_vertex) != 0) fail(Errc::UnknownCell, "not a 0-cell: " + std::to_string(sal_vertex));
  return base[static_cast<std::size_t>(sal_vertex)];
}

SalvettiComplex build_salvetti(const CellComplex& q, const HemisphereMaps& maps) {
  CheckResult qmh = check_qmh(q, maps);
  if (!qmh.pass) fail(Errc::NotQmh, qmh.witness);

  SalvettiComplex s;
  s.base_complex = std::make_shared<CellComplex>(q);

  // Cells ordered by (dim of base, base id, apex id); dimension-by-dimension
  // as in the inductive construction.
  std::vector<std::pair<Cell, Vertex>> cells;
  for (int d = 0; d <= q.top_dim(); ++d) {
    for (Cell e : q.cells_of_dim(d))
      for (Vertex v : q.vertices_of(e)) cells.emplace_back(e, v);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    s.base.push_back(cells[i].first);
    s.apex.push_back(cells[i].second);
    s.index[cells[i]] = static_cast<Cell>(i);
  }

  std::vector<CellDescriptor> descr(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [e, v] = cells[i];
    CellDescriptor& d = descr[i];
    d.dim = q.dim(e);
    std::set<Cell> faces;
    std::set<Cell> verts;
    for (Cell ep : q.proper_faces(e)) {
      Cell f = s.index.at({ep, maps.raw_nearest(ep, v)});
      faces.insert(f);
      if (q.dim(ep) == 0) verts.insert(f);
    }
    if (d.dim == 0) {
      d.verts = {static_cast<Cell>(i)};
    } else {
      d.faces.assign(faces.begin(), faces.end());
      d.verts.assign(verts.begin(), verts.end());
    }
  }
  s.complex = build_complex(descr);
  return s;
}

SalvettiComplex build_salvetti(const CellComplex& q) {
  return build_salvetti(q, compute_hemisphere_maps(q));
}

VertexPath opposite_path(const CellComplex& q, const VertexPath& path) {
  if (path.empty()) fail(Errc::NotPositive, "empty path");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& nb = q.neighbors(path[i]);
    if (!std::binary_search(nb.begin(), nb.end(), path[i + 1]))
      fail(Errc::NotPositive, "vertices " + std::to_string(path[i]) + " and " + std::to_string(path[i + 1]) + " are not adjacent");
  }
  return VertexPath(path.rbegin(), path.rend());
}

void save_salvetti(const SalvettiComplex& s, std::ostream& out) {
  const CellComplex& c = s.complex;
  auto render = [&](Cell sc) {
    return std::to_string(s.base[static_cast<std::size_t>(sc)]) + "@" + std::to_string(s.apex[static_cast<std::size_t>(sc)]);
  };
  out << "cells " << c.cell_count() << "\n";
  for (Cell e = 0; e < c.cell_count(); ++e) {
    out << render(e) << " " << c.dim(e) << " faces=";
    const auto& f = c.proper_faces(e);
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << render(f[i]);
    out << " verts=";
    const auto& v = c.vertices_of(e);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << render(v[i]);
    out << "\n";
  }
}

}  // namespace garside
