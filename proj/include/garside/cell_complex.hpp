#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "garside/errors.hpp"

namespace garside {

/// A cell is identified by its dense index within the owning complex.
using Cell = int;
/// Vertices are the 0-cells; a vertex id is the cell id of a 0-cell.
using Vertex = int;

/// Input record for build_complex. Faces must reference previously declared
/// cells of strictly smaller dimension; the transitive closure is taken.
struct CellDescriptor {
  int dim = 0;
  std::vector<Cell> faces;
  std::vector<Vertex> verts;
};

/// Finite regular cell complex given as a graded face poset with vertex
/// incidence. Immutable after construction; all queries are const and safe
/// for concurrent use. Skeleton distances are memoized per source vertex.
class CellComplex {
 public:
  CellComplex() = default;
  CellComplex(const CellComplex& o)
      : dim_(o.dim_), faces_(o.faces_), verts_(o.verts_), vertex_cells_(o.vertex_cells_),
        vertex_index_(o.vertex_index_), edge_cells_(o.edge_cells_), nbrs_(o.nbrs_),
        top_dim_(o.top_dim_) {
    std::lock_guard<std::mutex> lock(o.dist_mutex_);
    dist_ = o.dist_;
  }
  CellComplex& operator=(const CellComplex& o) {
    if (this != &o) {
      CellComplex tmp(o);
      *this = std::move(tmp);
    }
    return *this;
  }
  CellComplex(CellComplex&& o) noexcept
      : dim_(std::move(o.dim_)), faces_(std::move(o.faces_)), verts_(std::move(o.verts_)),
        vertex_cells_(std::move(o.vertex_cells_)), vertex_index_(std::move(o.vertex_index_)),
        edge_cells_(std::move(o.edge_cells_)), nbrs_(std::move(o.nbrs_)), top_dim_(o.top_dim_),
        dist_(std::move(o.dist_)) {}
  CellComplex& operator=(CellComplex&& o) noexcept {
    dim_ = std::move(o.dim_);
    faces_ = std::move(o.faces_);
    verts_ = std::move(o.verts_);
    vertex_cells_ = std::move(o.vertex_cells_);
    vertex_index_ = std::move(o.vertex_index_);
    edge_cells_ = std::move(o.edge_cells_);
    nbrs_ = std::move(o.nbrs_);
    top_dim_ = o.top_dim_;
    dist_ = std::move(o.dist_);
    return *this;
  }

  int cell_count() const { return static_cast<int>(dim_.size()); }
  int dim(Cell e) const;
  int top_dim() const { return top_dim_; }

  /// Proper faces of e (transitively closed, sorted, excluding e).
  const std::vector<Cell>& proper_faces(Cell e) const;
  /// The set Q(e): all cells contained in e, including e itself.
  std::vector<Cell> faces_of(Cell e) const;
  /// V(e), sorted vertex ids.
  const std::vector<Vertex>& vertices_of(Cell e) const;

  bool is_vertex(Cell e) const { return dim(e) == 0; }
  bool is_face(Cell sub, Cell super) const;  // strict: sub < super

  const std::vector<Vertex>& vertices() const { return vertex_cells_; }
  int vertex_count() const { return static_cast<int>(vertex_cells_.size()); }
  std::vector<Cell> cells_of_dim(int d) const;

  /// 1-cells incident to the vertex graph.
  const std::vector<Cell>& edges() const { return edge_cells_; }
  std::pair<Vertex, Vertex> edge_endpoints(Cell e) const;
  /// Distinct neighbours of v in the 1-skeleton, sorted.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  /// All 1-cells joining v and w.
  std::vector<Cell> edges_between(Vertex v, Vertex w) const;

  /// Combinatorial length of the shortest edge path between two 0-cells.
  int skeleton_distance(Vertex v, Vertex w) const;
  int diameter() const;

  /// Closed cell viewed as a complex of its own, with its own skeleton
  /// metric. to_parent maps sub ids back to ids of this complex.
  struct SubComplex {
    CellComplex complex;
    std::vector<Cell> to_parent;
    std::vector<Cell> from_parent;  // parent id -> sub id or -1
  };
  SubComplex closed_cell(Cell e) const;

  friend CellComplex build_complex(const std::vector<CellDescriptor>& descriptors);

 private:
  void check_vertex(Vertex v) const;
  const std::vector<int>& dist_row(Vertex v) const;

  std::vector<int> dim_;
  std::vector<std::vector<Cell>> faces_;   // proper faces, closed, sorted
  std::vector<std::vector<Vertex>> verts_;
  std::vector<Vertex> vertex_cells_;       // ids of 0-cells, ascending
  std::vector<int> vertex_index_;          // cell id -> index into vertex_cells_, or -1
  std::vector<Cell> edge_cells_;           // ids of 1-cells, ascending
  std::vector<std::vector<Vertex>> nbrs_;  // per vertex index, sorted unique
  int top_dim_ = 0;

  mutable std::mutex dist_mutex_;
  mutable std::vector<std::shared_ptr<const std::vector<int>>> dist_;
};

/// Validates the poset axioms (grading, vertex monotonicity, regular 1-cells)
/// and skeleton connectivity. Throws NonRegular or Disconnected.
CellComplex build_complex(const std::vector<CellDescriptor>& descriptors);

/// Line-oriented complex file format:
///   cells <n>
///   <id> <dim> faces=<comma-list> verts=<comma-list>
/// '#' starts a comment. Ids are sequential from 0.
CellComplex load_complex(std::istream& in);
void save_complex(const CellComplex& c, std::ostream& out);

/// Convenience: the n-cycle graph complex (n vertices, n edges).
CellComplex make_cycle_complex(int n);

}  // namespace garside
