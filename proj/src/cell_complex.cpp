#include "garside/cell_complex.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace garside {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonRegular: return "NonRegular";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UnknownCell: return "UnknownCell";
    case Errc::Tie: return "Tie";
    case Errc::NotQmh: return "NotQmh";
    case Errc::NotMh: return "NotMh";
    case Errc::NotFlat: return "NotFlat";
    case Errc::NotInvolutive: return "NotInvolutive";
    case Errc::NotSimplicial: return "NotSimplicial";
    case Errc::NotPositive: return "NotPositive";
    case Errc::ZeroNormal: return "ZeroNormal";
    case Errc::BadSignChar: return "BadSignChar";
    case Errc::RaggedLengths: return "RaggedLengths";
    case Errc::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case Errc::MissingZeroVector: return "MissingZeroVector";
    case Errc::NoTopes: return "NoTopes";
    case Errc::NotGraded: return "NotGraded";
    case Errc::NoCircuits: return "NoCircuits";
    case Errc::ExplosionGuard: return "ExplosionGuard";
    case Errc::NotUniqueExtremum: return "NotUniqueExtremum";
    case Errc::SourceMismatch: return "SourceMismatch";
    case Errc::NotComposable: return "NotComposable";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

int CellComplex::dim(Cell e) const {
  if (e < 0 || e >= cell_count()) fail(Errc::UnknownCell, "cell id " + std::to_string(e));
  return dim_[e];
}

const std::vector<Cell>& CellComplex::proper_faces(Cell e) const {
  dim(e);
  return faces_[e];
}

std::vector<Cell> CellComplex::faces_of(Cell e) const {
  std::vector<Cell> out = proper_faces(e);
  out.insert(std::lower_bound(out.begin(), out.end(), e), e);
  return out;
}

const std::vector<Vertex>& CellComplex::vertices_of(Cell e) const {
  dim(e);
  return verts_[e];
}

bool CellComplex::is_face(Cell sub, Cell super) const {
  const auto& f = proper_faces(super);
  return std::binary_search(f.begin(), f.end(), sub);
}

std::vector<Cell> CellComplex::cells_of_dim(int d) const {
  std::vector<Cell> out;
  for (Cell e = 0; e < cell_count(); ++e)
    if (dim_[e] == d) out.push_back(e);
  return out;
}

std::pair<Vertex, Vertex> CellComplex::edge_endpoints(Cell e) const {
  if (dim(e) != 1) fail(Errc::UnknownCell, "cell " + std::to_string(e) + " is not a 1-cell");
  return {verts_[e][0], verts_[e][1]};
}

const std::vector<Vertex>& CellComplex::neighbors(Vertex v) const {
  check_vertex(v);
  return nbrs_[vertex_index_[v]];
}

std::vector<Cell> CellComplex::edges_between(Vertex v, Vertex w) const {
  check_vertex(v);
  check_vertex(w);
  std::vector<Cell> out;
  for (Cell e : edge_cells_) {
    auto [a, b] = std::make_pair(verts_[e][0], verts_[e][1]);
    if ((a == v && b == w) || (a == w && b == v)) out.push_back(e);
  }
  return out;
}

void CellComplex::check_vertex(Vertex v) const {
  if (v < 0 || v >= cell_count() || dim_[v] != 0)
    fail(Errc::UnknownCell, "not a 0-cell: " + std::to_string(v));
}

const std::vector<int>& CellComplex::dist_row(Vertex v) const {
  int vi = vertex_index_[v];
  {
    std::lock_guard<std::mutex> lock(dist_mutex_);
    if (dist_[vi]) return *dist_[vi];
  }
  // BFS with unit edge weights over vertex indices.
  int n = vertex_count();
  auto row = std::make_shared<std::vector<int>>(n, -1);
  std::deque<int> queue{vi};
  (*row)[vi] = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (Vertex nb : nbrs_[cur]) {
      int ni = vertex_index_[nb];
      if ((*row)[ni] < 0) {
        (*row)[ni] = (*row)[cur] + 1;
        queue.push_back(ni);
      }
    }
  }
  std::lock_guard<std::mutex> lock(dist_mutex_);
  if (!dist_[vi]) dist_[vi] = row;
  return *dist_[vi];
}

int CellComplex::skeleton_distance(Vertex v, Vertex w) const {
  check_vertex(v);
  check_vertex(w);
  return dist_row(v)[vertex_index_[w]];
}

int CellComplex::diameter() const {
  int d = 0;
  for (Vertex v : vertex_cells_)
    for (Vertex w : vertex_cells_) d = std::max(d, skeleton_distance(v, w));
  return d;
}

CellComplex::SubComplex CellComplex::closed_cell(Cell e) const {
  std::vector<Cell> cells = faces_of(e);
  // Sub ids are assigned in (dim, parent id) order so faces precede cells.
  std::stable_sort(cells.begin(), cells.end(),
                   [&](Cell a, Cell b) { return dim_[a] != dim_[b] ? dim_[a] < dim_[b] : a < b; });
  SubComplex sub;
  sub.to_parent = cells;
  sub.from_parent.assign(cell_count(), -1);
  for (std::size_t i = 0; i < cells.size(); ++i) sub.from_parent[cells[i]] = static_cast<int>(i);

  std::vector<CellDescriptor> ordered(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Cell parent = cells[i];
    CellDescriptor d;
    d.dim = dim_[parent];
    for (Cell f : faces_[parent])
      if (sub.from_parent[f] >= 0) d.faces.push_back(sub.from_parent[f]);
    for (Vertex v : verts_[parent]) d.verts.push_back(sub.from_parent[v]);
    ordered[i] = std::move(d);
  }
  sub.complex = build_complex(ordered);
  return sub;
}

CellComplex build_complex(const std::vector<CellDescriptor>& descriptors) {
  CellComplex c;
  int n = static_cast<int>(descriptors.size());
  c.dim_.resize(n);
  c.faces_.resize(n);
  c.verts_.resize(n);
  c.vertex_index_.assign(n, -1);

  for (Cell e = 0; e < n; ++e) {
    const CellDescriptor& d = descriptors[e];
    if (d.dim < 0) fail(Errc::NonRegular, "negative dimension at cell " + std::to_string(e));
    c.dim_[e] = d.dim;
    c.top_dim_ = std::max(c.top_dim_, d.dim);

    std::set<Cell> closure;
    for (Cell f : d.faces) {
      if (f < 0 || f >= e) fail(Errc::NonRegular, "cell " + std::to_string(e) + " references undeclared face " + std::to_string(f));
      if (c.dim_[f] >= d.dim)
        fail(Errc::NonRegular, "face " + std::to_string(f) + " of cell " + std::to_string(e) + " has dimension >= " + std::to_string(d.dim));
      closure.insert(f);
      closure.insert(c.faces_[f].begin(), c.faces_[f].end());
    }

    std::set<Vertex> vset(d.verts.begin(), d.verts.end());
    if (d.dim == 0) {
      if (!d.faces.empty()) fail(Errc::NonRegular, "0-cell with faces");
      if (!vset.empty() && vset != std::set<Vertex>{e})
        fail(Errc::NonRegular, "0-cell " + std::to_string(e) + " with foreign vertex set");
      vset = {e};
    } else {
      if (d.dim == 1) {
        if (d.verts.size() != 2 || vset.size() != 2)
          fail(Errc::NonRegular, "1-cell " + std::to_string(e) + " without two distinct endpoints");
      }
      for (Vertex v : vset) {
        if (v < 0 || v >= e || c.dim_[v] != 0)
          fail(Errc::NonRegular, "cell " + std::to_string(e) + " lists non-vertex " + std::to_string(v));
        closure.insert(v);
      }
      // V(e') must be contained in V(e) for every face.
      for (Cell f : closure) {
        for (Vertex v : c.verts_[f])
          if (!vset.count(v))
            fail(Errc::NonRegular, "vertex set of face " + std::to_string(f) + " not contained in cell " + std::to_string(e));
      }
    }
    c.faces_[e].assign(closure.begin(), closure.end());
    c.verts_[e].assign(vset.begin(), vset.end());
  }

  for (Cell e = 0; e < n; ++e) {
    if (c.dim_[e] == 0) {
      c.vertex_index_[e] = static_cast<int>(c.vertex_cells_.size());
      c.vertex_cells_.push_back(e);
    } else if (c.dim_[e] == 1) {
      c.edge_cells_.push_back(e);
    }
  }

  c.nbrs_.resize(c.vertex_cells_.size());
  for (Cell e : c.edge_cells_) {
    Vertex a = c.verts_[e][0], b = c.verts_[e][1];
    c.nbrs_[c.vertex_index_[a]].push_back(b);
    c.nbrs_[c.vertex_index_[b]].push_back(a);
  }
  for (auto& nb : c.nbrs_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  // Connectivity of the 1-skeleton.
  if (!c.vertex_cells_.empty()) {
    std::vector<char> seen(c.vertex_cells_.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (Vertex nb : c.nbrs_[cur]) {
        int ni = c.vertex_index_[nb];
        if (!seen[ni]) {
          seen[ni] = 1;
          ++reached;
          queue.push_back(ni);
        }
      }
    }
    if (reached != c.vertex_cells_.size()) fail(Errc::Disconnected, "1-skeleton is not connected");
  }

  c.dist_.resize(c.vertex_cells_.size());
  return c;
}

namespace {

std::vector<int> parse_id_list(const std::string& text, int line_no) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad id '" + item + "' on line " + std::to_string(line_no));
    }
  }
  return out;
}

}  // namespace

CellComplex load_complex(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      std::size_t b = line.find_last_not_of(" \t\r");
      out = line.substr(a, b - a + 1);
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) fail(Errc::ParseError, "empty complex file");
  std::stringstream hs(header);
  std::string kw;
  long count = -1;
  hs >> kw >> count;
  if (kw != "cells" || count < 0) fail(Errc::ParseError, "expected 'cells <n>' header");

  std::vector<CellDescriptor> descr;
  for (long i = 0; i < count; ++i) {
    std::string row;
    if (!next_line(row)) fail(Errc::ParseError, "expected " + std::to_string(count) + " cell lines");
    std::stringstream rs(row);
    long id = -1;
    int dim = -1;
    std::string ftok, vtok;
    rs >> id >> dim >> ftok >> vtok;
    if (id != i) fail(Errc::ParseError, "cell ids must be sequential; got " + std::to_string(id) + " at line " + std::to_string(line_no));
    if (dim < 0 || ftok.rfind("faces=", 0) != 0 || vtok.rfind("verts=", 0) != 0)
      fail(Errc::ParseError, "malformed cell line " + std::to_string(line_no));
    CellDescriptor d;
    d.dim = dim;
    d.faces = parse_id_list(ftok.substr(6), line_no);
    d.verts = parse_id_list(vtok.substr(6), line_no);
    descr.push_back(std::move(d));
  }
  return build_complex(descr);
}

void save_complex(const CellComplex& c, std::ostream& out) {
  out << "cells " << c.cell_count() << "\n";
  for (Cell e = 0; e < c.cell_count(); ++e) {
    out << e << " " << c.dim(e) << " faces=";
    const auto& f = c.proper_faces(e);
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << " verts=";
    const auto& v = c.vertices_of(e);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "\n";
  }
}

CellComplex make_cycle_complex(int n) {
  std::vector<CellDescriptor> descr;
  for (int i = 0; i < n; ++i) descr.push_back({0, {}, {}});
  for (int i = 0; i < n; ++i) descr.push_back({1, {i, (i + 1) % n}, {i, (i + 1) % n}});
  return build_complex(descr);
}

}  // namespace garside
