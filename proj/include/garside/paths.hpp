#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "garside/cell_complex.hpp"
#include "garside/mh.hpp"
#include "garside/salvetti.hpp"

namespace garside {

/// Equivalence class of positive paths under elementary moves: replacement of
/// a minimal subpath from u to farthest(u,e), for a cell e containing u, by
/// another minimal path with the same endpoints.
struct PathClass {
  VertexPath rep;                  // lexicographically least member
  std::vector<VertexPath> members; // sorted
  Vertex src = -1, tgt = -1;
  int length = 0;

  bool contains(const VertexPath& p) const;
};

struct OracleOptions {
  std::size_t class_cap = 100000;  // members per class before ExplosionGuard
  std::size_t set_cap = 100000;    // classes per closure set
  bool confine_to_cell = false;    // restrict moves to the carrying cell
};

/// Brute-force ground truth for the category of positive paths. Everything
/// here enumerates; it verifies the engine, it does not replace it.
class PathOracle {
 public:
  PathOracle(const CellComplex& q, const HemisphereMaps& maps, OracleOptions opts = {});
  explicit PathOracle(const CellComplex& q, OracleOptions opts = {});

  const CellComplex& complex() const { return *q_; }
  const HemisphereMaps& maps() const { return maps_; }

  /// All geodesic vertex walks from v to w.
  std::vector<VertexPath> minimal_paths(Vertex v, Vertex w) const;

  /// Single-move neighbours of p (p itself excluded).
  std::vector<VertexPath> elementary_moves(const VertexPath& p) const;

  /// Closure of {p} under elementary moves. Cached; throws ExplosionGuard.
  const PathClass& path_class(const VertexPath& p) const;

  bool equivalent(const VertexPath& a, const VertexPath& b) const;

  /// All minimal positive paths between equal endpoints lie in one class.
  CheckResult check_flat() const;

  /// Classes of all prefixes of all members, sorted by (length, rep).
  std::vector<const PathClass*> divisors(const VertexPath& p) const;
  std::vector<const PathClass*> right_divisors(const VertexPath& p) const;

  /// Greatest lower / least upper bound of two classes with a common start,
  /// by divisor-set intersection and by the square-completion closure.
  const PathClass& meet(const VertexPath& f, const VertexPath& g) const;
  const PathClass& join(const VertexPath& f, const VertexPath& g) const;

  /// Unique 2-cell containing the three vertices, or -1 when none exists.
  /// Throws NotSimplicial when several do.
  Cell triangle_two_cell(Vertex y, Vertex y1, Vertex y2) const;

 private:
  void check_positive(const VertexPath& p) const;
  const PathClass& class_of_checked(const VertexPath& p) const;
  const VertexPath& minimal_rep(Vertex v, Vertex w) const;  // asserts one class

  std::shared_ptr<const CellComplex> q_;
  HemisphereMaps maps_;
  OracleOptions opts_;
  // (u -> sorted targets z with farthest(u,e) = z for some cell e; and cells)
  std::map<std::pair<Vertex, Vertex>, std::vector<Cell>> move_cells_;
  std::vector<std::vector<Cell>> two_cells_of_vertex_;  // by vertex index
  std::vector<int> vindex_;

  mutable std::mutex mutex_;
  mutable std::map<VertexPath, std::shared_ptr<const PathClass>> class_memo_;
  mutable std::map<VertexPath, std::vector<const PathClass*>> divisor_memo_;
  mutable std::map<std::pair<Vertex, Vertex>, VertexPath> minimal_rep_memo_;
  mutable std::map<std::pair<Vertex, Vertex>, std::vector<VertexPath>> minimal_memo_;
};

}  // namespace garside
