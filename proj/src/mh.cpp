#include "garside/mh.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace garside {

namespace {

std::string pair_str(Vertex v, Cell e) {
  std::ostringstream os;
  os << "(v=" << v << ", e=" << e << ")";
  return os.str();
}

}  // namespace

bool HemisphereMaps::total() const {
  for (const auto& row : nearest)
    for (Vertex w : row)
      if (w < 0) return false;
  for (const auto& row : farthest)
    for (Vertex w : row)
      if (w < 0) return false;
  return true;
}

HemisphereMaps compute_hemisphere_maps(const CellComplex& q) {
  HemisphereMaps m;
  m.vertex_cells = q.vertices();
  m.vertex_index.assign(q.cell_count(), -1);
  for (std::size_t i = 0; i < m.vertex_cells.size(); ++i) m.vertex_index[m.vertex_cells[i]] = static_cast<int>(i);

  int nc = q.cell_count();
  int nv = q.vertex_count();
  m.nearest.assign(nc, std::vector<Vertex>(nv, -1));
  m.farthest.assign(nc, std::vector<Vertex>(nv, -1));
  for (Cell e = 0; e < nc; ++e) {
    const auto& ve = q.vertices_of(e);
    for (int vi = 0; vi < nv; ++vi) {
      Vertex v = m.vertex_cells[vi];
      int best_min = -1, best_max = -1;
      Vertex arg_min = -1, arg_max = -1;
      bool tie_min = false, tie_max = false;
      for (Vertex w : ve) {
        int d = q.skeleton_distance(v, w);
        if (best_min < 0 || d < best_min) {
          best_min = d;
          arg_min = w;
          tie_min = false;
        } else if (d == best_min) {
          tie_min = true;
        }
        if (best_max < 0 || d > best_max) {
          best_max = d;
          arg_max = w;
          tie_max = false;
        } else if (d == best_max) {
          tie_max = true;
        }
      }
      m.nearest[e][vi] = tie_min ? -1 : arg_min;
      m.farthest[e][vi] = tie_max ? -1 : arg_max;
    }
  }
  return m;
}

Vertex nearest_vertex(const CellComplex& q, const HemisphereMaps& m, Vertex v, Cell e) {
  q.dim(e);
  Vertex w = m.raw_nearest(e, v);
  if (w < 0) fail(Errc::Tie, "no unique nearest vertex at " + pair_str(v, e));
  return w;
}

Vertex farthest_vertex(const CellComplex& q, const HemisphereMaps& m, Vertex v, Cell e) {
  q.dim(e);
  Vertex w = m.raw_farthest(e, v);
  if (w < 0) fail(Errc::Tie, "no unique farthest vertex at " + pair_str(v, e));
  return w;
}

Vertex nearest_vertex(const CellComplex& q, Vertex v, Cell e) {
  return nearest_vertex(q, compute_hemisphere_maps(q), v, e);
}

Vertex farthest_vertex(const CellComplex& q, Vertex v, Cell e) {
  return farthest_vertex(q, compute_hemisphere_maps(q), v, e);
}

namespace {

struct QmhVerdict {
  CheckResult uniqueness;  // conditions (i)/(ii)
  bool ab_ok = true;       // conditions (A) and (B)
  std::string ab_witness;
  bool additive_ok = true;
  std::string additive_witness;
};

QmhVerdict qmh_verdict(const CellComplex& q, const HemisphereMaps& m) {
  QmhVerdict out;
  for (Cell e = 0; e < q.cell_count(); ++e) {
    for (Vertex v : q.vertices()) {
      if (m.raw_nearest(e, v) < 0 || m.raw_farthest(e, v) < 0) {
        out.uniqueness.pass = false;
        out.uniqueness.witness = "tie at " + pair_str(v, e);
        return out;
      }
    }
  }

  for (Cell e = 0; e < q.cell_count() && out.ab_ok; ++e) {
    std::vector<Cell> sub = q.faces_of(e);
    for (Vertex v : q.vertices()) {
      Vertex nv = m.raw_nearest(e, v);
      Vertex fv = m.raw_farthest(e, v);
      for (Cell ep : sub) {
        bool a = m.raw_nearest(ep, v) == m.raw_nearest(ep, nv) &&
                 m.raw_nearest(ep, v) == m.raw_farthest(ep, fv);
        bool b = m.raw_farthest(ep, v) == m.raw_nearest(ep, fv) &&
                 m.raw_farthest(ep, v) == m.raw_farthest(ep, nv);
        if (!a || !b) {
          out.ab_ok = false;
          out.ab_witness = "condition " + std::string(!a ? "A" : "B") + " fails at " + pair_str(v, e) + " with e'=" + std::to_string(ep);
          break;
        }
      }
      if (!out.ab_ok) break;
    }
  }

  for (Cell e = 0; e < q.cell_count() && out.additive_ok; ++e) {
    for (Vertex v : q.vertices()) {
      Vertex fv = m.raw_farthest(e, v);
      int dvf = q.skeleton_distance(v, fv);
      for (Vertex w : q.vertices_of(e)) {
        if (dvf != q.skeleton_distance(v, w) + q.skeleton_distance(w, fv)) {
          out.additive_ok = false;
          out.additive_witness = "d(v,far(v,e)) != d(v,w)+d(w,far(v,e)) at " + pair_str(v, e) + " with w=" + std::to_string(w);
          break;
        }
      }
      if (!out.additive_ok) break;
    }
  }

  if (out.ab_ok != out.additive_ok)
    throw std::logic_error("(A)/(B) and the additive identity disagree; this contradicts their equivalence");
  return out;
}

}  // namespace

CheckResult check_qmh(const CellComplex& q, const HemisphereMaps& m) {
  QmhVerdict v = qmh_verdict(q, m);
  if (!v.uniqueness.pass) return v.uniqueness;
  if (!v.ab_ok) return {false, v.ab_witness};
  return {true, ""};
}

CheckResult check_qmh(const CellComplex& q) { return check_qmh(q, compute_hemisphere_maps(q)); }

namespace {

struct LocalData {
  CellComplex::SubComplex sub;
  HemisphereMaps maps;
};

// Local nearest/farthest of cell e, in parent ids. Returns false on tie.
bool local_lookup(const LocalData& ld, Vertex v_parent, Cell ep_parent, Vertex* near_out, Vertex* far_out) {
  int sv = ld.sub.from_parent[v_parent];
  int se = ld.sub.from_parent[ep_parent];
  Vertex n = ld.maps.raw_nearest(se, sv);
  Vertex f = ld.maps.raw_farthest(se, sv);
  if (n < 0 || f < 0) return false;
  *near_out = ld.sub.to_parent[n];
  *far_out = ld.sub.to_parent[f];
  return true;
}

CheckResult check_lmh_impl(const CellComplex& q, std::map<Cell, LocalData>* locals_out) {
  std::map<Cell, LocalData>& locals = *locals_out;
  for (Cell e = 0; e < q.cell_count(); ++e) {
    LocalData ld;
    try {
      ld.sub = q.closed_cell(e);
    } catch (const Error& err) {
      return {false, "closed cell " + std::to_string(e) + " is not a valid complex: " + err.what()};
    }
    ld.maps = compute_hemisphere_maps(ld.sub.complex);
    CheckResult local = check_qmh(ld.sub.complex, ld.maps);
    if (!local.pass)
      return {false, "closed cell " + std::to_string(e) + " is not QMH: " + local.witness};
    locals.emplace(e, std::move(ld));
  }

  // Compatibility on shared faces.
  for (Cell f = 0; f < q.cell_count(); ++f) {
    std::vector<Cell> carriers;
    for (Cell e = 0; e < q.cell_count(); ++e)
      if (e == f || q.is_face(f, e)) carriers.push_back(e);
    for (std::size_t i = 0; i < carriers.size(); ++i) {
      for (std::size_t j = i + 1; j < carriers.size(); ++j) {
        Cell e1 = carriers[i], e2 = carriers[j];
        const auto& v1 = q.vertices_of(e1);
        for (Vertex v : v1) {
          const auto& v2 = q.vertices_of(e2);
          if (!std::binary_search(v2.begin(), v2.end(), v)) continue;
          Vertex n1, f1, n2, f2;
          bool ok1 = local_lookup(locals.at(e1), v, f, &n1, &f1);
          bool ok2 = local_lookup(locals.at(e2), v, f, &n2, &f2);
          if (!ok1 || !ok2) continue;  // ties already rejected above
          if (n1 != n2 || f1 != f2)
            return {false, "local maps of cells " + std::to_string(e1) + " and " + std::to_string(e2) +
                               " disagree on face " + std::to_string(f) + " at v=" + std::to_string(v)};
        }
      }
    }
  }
  return {true, ""};
}

}  // namespace

CheckResult check_lmh(const CellComplex& q) {
  std::map<Cell, LocalData> locals;
  return check_lmh_impl(q, &locals);
}

MhReport check_mh(const CellComplex& q) {
  MhReport r;
  HemisphereMaps m = compute_hemisphere_maps(q);
  QmhVerdict v = qmh_verdict(q, m);
  if (!v.uniqueness.pass) {
    r.qmh = v.uniqueness;
    r.additive_identity = v.uniqueness;
  } else {
    r.qmh = v.ab_ok ? CheckResult{true, ""} : CheckResult{false, v.ab_witness};
    r.additive_identity = v.additive_ok ? CheckResult{true, ""} : CheckResult{false, v.additive_witness};
  }

  std::map<Cell, LocalData> locals;
  r.lmh = check_lmh_impl(q, &locals);

  if (!r.qmh.pass) {
    r.mh = {false, "not QMH: " + r.qmh.witness};
    return r;
  }
  if (!r.lmh.pass) {
    r.mh = {false, "not LMH: " + r.lmh.witness};
    return r;
  }
  for (Cell e = 0; e < q.cell_count(); ++e) {
    const LocalData& ld = locals.at(e);
    for (Cell ep : q.faces_of(e)) {
      for (Vertex v : q.vertices_of(e)) {
        Vertex ln, lf;
        if (!local_lookup(ld, v, ep, &ln, &lf)) continue;
        Vertex gn = m.raw_nearest(ep, v);
        Vertex gf = m.raw_farthest(ep, v);
        if (gn != ln || gf != lf) {
          r.mh = {false, "global and cell-local maps disagree at " + pair_str(v, e) + " with e'=" + std::to_string(ep) +
                             " (global near=" + std::to_string(gn) + " far=" + std::to_string(gf) +
                             ", local near=" + std::to_string(ln) + " far=" + std::to_string(lf) + ")"};
          return r;
        }
      }
    }
  }
  r.mh = {true, ""};
  return r;
}

Involution find_involution(const CellComplex& q) {
  Involution phi;
  phi.image.assign(q.cell_count(), -1);
  for (Vertex v : q.vertices()) {
    int best = -1;
    Vertex arg = -1;
    bool tie = false;
    for (Vertex w : q.vertices()) {
      int d = q.skeleton_distance(v, w);
      if (d > best) {
        best = d;
        arg = w;
        tie = false;
      } else if (d == best) {
        tie = true;
      }
    }
    if (tie) fail(Errc::NotInvolutive, "no unique farthest vertex from v=" + std::to_string(v));
    phi.image[v] = arg;
  }
  for (Vertex v : q.vertices()) {
    if (phi.image[phi.image[v]] != v)
      fail(Errc::NotInvolutive, "phi^2 != id at v=" + std::to_string(v));
    for (Vertex w : q.vertices()) {
      if (q.skeleton_distance(v, phi.image[v]) !=
          q.skeleton_distance(v, w) + q.skeleton_distance(w, phi.image[v]))
        fail(Errc::NotInvolutive,
             "d(v,phi(v)) != d(v,w)+d(w,phi(v)) at v=" + std::to_string(v) + ", w=" + std::to_string(w));
    }
  }
  for (Cell e : q.edges()) {
    auto [a, b] = q.edge_endpoints(e);
    const auto& nb = q.neighbors(phi.image[a]);
    if (!std::binary_search(nb.begin(), nb.end(), phi.image[b]))
      fail(Errc::NotInvolutive, "phi does not map edge " + std::to_string(e) + " to an edge");
  }
  return phi;
}

}  // namespace garside
