#include "garside/paths.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace garside {

namespace {

std::string path_str(const VertexPath& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
  return os.str();
}

}  // namespace

bool PathClass::contains(const VertexPath& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

PathOracle::PathOracle(const CellComplex& q, const HemisphereMaps& maps, OracleOptions opts)
    : q_(std::make_shared<CellComplex>(q)), maps_(maps), opts_(opts) {
  CheckResult qmh = check_qmh(*q_, maps_);
  if (!qmh.pass) fail(Errc::NotQmh, qmh.witness);

  for (Cell e = 0; e < q_->cell_count(); ++e) {
    for (Vertex u : q_->vertices_of(e)) {
      Vertex z = maps_.raw_farthest(e, u);
      move_cells_[{u, z}].push_back(e);
    }
  }
  vindex_.assign(q_->cell_count(), -1);
  const auto& vs = q_->vertices();
  two_cells_of_vertex_.resize(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) vindex_[vs[i]] = static_cast<int>(i);
  for (Cell e : q_->cells_of_dim(2))
    for (Vertex v : q_->vertices_of(e)) two_cells_of_vertex_[vindex_[v]].push_back(e);
}

PathOracle::PathOracle(const CellComplex& q, OracleOptions opts)
    : PathOracle(q, compute_hemisphere_maps(q), opts) {}

void PathOracle::check_positive(const VertexPath& p) const {
  if (p.empty()) fail(Errc::NotPositive, "empty vertex sequence");
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto& nb = q_->neighbors(p[i]);
    if (!std::binary_search(nb.begin(), nb.end(), p[i + 1]))
      fail(Errc::NotPositive, "not an edge walk: " + path_str(p));
  }
}

std::vector<VertexPath> PathOracle::minimal_paths(Vertex v, Vertex w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = minimal_memo_.find({v, w});
    if (it != minimal_memo_.end()) return it->second;
  }
  std::vector<VertexPath> out;
  VertexPath cur{v};
  // Geodesics: every step decreases the distance to w.
  std::function<void(Vertex)> rec = [&](Vertex at) {
    if (at == w) {
      out.push_back(cur);
      return;
    }
    int d = q_->skeleton_distance(at, w);
    for (Vertex nb : q_->neighbors(at)) {
      if (q_->skeleton_distance(nb, w) == d - 1) {
        cur.push_back(nb);
        rec(nb);
        cur.pop_back();
      }
    }
  };
  rec(v);
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(mutex_);
  minimal_memo_[{v, w}] = out;
  return out;
}

std::vector<VertexPath> PathOracle::elementary_moves(const VertexPath& p) const {
  check_positive(p);
  std::set<VertexPath> out;
  int k = static_cast<int>(p.size()) - 1;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      Vertex u = p[static_cast<std::size_t>(i)], z = p[static_cast<std::size_t>(j)];
      if (j - i != q_->skeleton_distance(u, z)) continue;  // subpath not minimal
      auto it = move_cells_.find({u, z});
      if (it == move_cells_.end()) continue;
      std::vector<VertexPath> repls;
      if (!opts_.confine_to_cell) {
        repls = minimal_paths(u, z);
      } else {
        // Both the replaced subpath and its replacements must stay in V(e).
        for (Cell e : it->second) {
          const auto& ve = q_->vertices_of(e);
          auto inside = [&](const VertexPath& seg) {
            return std::all_of(seg.begin(), seg.end(), [&](Vertex x) {
              return std::binary_search(ve.begin(), ve.end(), x);
            });
          };
          VertexPath seg(p.begin() + i, p.begin() + j + 1);
          if (!inside(seg)) continue;
          for (const VertexPath& m : minimal_paths(u, z))
            if (inside(m)) repls.push_back(m);
        }
        std::sort(repls.begin(), repls.end());
        repls.erase(std::unique(repls.begin(), repls.end()), repls.end());
      }
      for (const VertexPath& m : repls) {
        VertexPath next(p.begin(), p.begin() + i);
        next.insert(next.end(), m.begin(), m.end());
        next.insert(next.end(), p.begin() + j + 1, p.end());
        if (next != p) out.insert(std::move(next));
      }
    }
  }
  return std::vector<VertexPath>(out.begin(), out.end());
}

const PathClass& PathOracle::path_class(const VertexPath& p) const {
  check_positive(p);
  return class_of_checked(p);
}

const PathClass& PathOracle::class_of_checked(const VertexPath& p) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = class_memo_.find(p);
    if (it != class_memo_.end()) return *it->second;
  }
  std::set<VertexPath> visited{p};
  std::deque<VertexPath> queue{p};
  while (!queue.empty()) {
    VertexPath cur = std::move(queue.front());
    queue.pop_front();
    for (VertexPath& next : elementary_moves(cur)) {
      if (visited.count(next)) continue;
      if (visited.size() >= opts_.class_cap)
        fail(Errc::ExplosionGuard, "class of " + path_str(p) + " exceeds " + std::to_string(opts_.class_cap) + " members");
      visited.insert(next);
      queue.push_back(std::move(next));
    }
  }
  auto cls = std::make_shared<PathClass>();
  cls->members.assign(visited.begin(), visited.end());
  cls->rep = cls->members.front();
  cls->src = p.front();
  cls->tgt = p.back();
  cls->length = static_cast<int>(p.size()) - 1;
  std::lock_guard<std::mutex> lock(mutex_);
  for (const VertexPath& m : cls->members) class_memo_.emplace(m, cls);
  return *class_memo_.at(p);
}

bool PathOracle::equivalent(const VertexPath& a, const VertexPath& b) const {
  check_positive(a);
  check_positive(b);
  if (a.size() != b.size() || a.front() != b.front() || a.back() != b.back()) return false;
  return class_of_checked(a).contains(b);
}

CheckResult PathOracle::check_flat() const {
  for (Vertex v : q_->vertices()) {
    for (Vertex w : q_->vertices()) {
      std::vector<VertexPath> paths = minimal_paths(v, w);
      if (paths.size() <= 1) continue;
      const PathClass& cls = class_of_checked(paths.front());
      for (const VertexPath& p : paths) {
        if (!cls.contains(p))
          return {false, "inequivalent minimal paths from " + std::to_string(v) + " to " + std::to_string(w) +
                             ": [" + path_str(paths.front()) + "] vs [" + path_str(p) + "]"};
      }
    }
  }
  return {true, ""};
}

std::vector<const PathClass*> PathOracle::divisors(const VertexPath& p) const {
  const PathClass& cls = class_of_checked(p);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = divisor_memo_.find(cls.rep);
    if (it != divisor_memo_.end()) return it->second;
  }
  std::set<VertexPath> prefixes;
  for (const VertexPath& m : cls.members)
    for (std::size_t k = 1; k <= m.size(); ++k) prefixes.insert(VertexPath(m.begin(), m.begin() + k));
  std::map<VertexPath, const PathClass*> by_rep;
  for (const VertexPath& pre : prefixes) {
    const PathClass& c = class_of_checked(pre);
    by_rep.emplace(c.rep, &c);
  }
  std::vector<const PathClass*> out;
  for (auto& [rep, ptr] : by_rep) out.push_back(ptr);
  std::sort(out.begin(), out.end(), [](const PathClass* a, const PathClass* b) {
    return a->length != b->length ? a->length < b->length : a->rep < b->rep;
  });
  std::lock_guard<std::mutex> lock(mutex_);
  divisor_memo_[cls.rep] = out;
  return out;
}

std::vector<const PathClass*> PathOracle::right_divisors(const VertexPath& p) const {
  const PathClass& cls = class_of_checked(p);
  std::set<VertexPath> suffixes;
  for (const VertexPath& m : cls.members)
    for (std::size_t k = 0; k < m.size(); ++k) suffixes.insert(VertexPath(m.begin() + k, m.end()));
  std::map<VertexPath, const PathClass*> by_rep;
  for (const VertexPath& suf : suffixes) {
    const PathClass& c = class_of_checked(suf);
    by_rep.emplace(c.rep, &c);
  }
  std::vector<const PathClass*> out;
  for (auto& [rep, ptr] : by_rep) out.push_back(ptr);
  std::sort(out.begin(), out.end(), [](const PathClass* a, const PathClass* b) {
    return a->length != b->length ? a->length < b->length : a->rep < b->rep;
  });
  return out;
}

Cell PathOracle::triangle_two_cell(Vertex y, Vertex y1, Vertex y2) const {
  std::vector<Cell> found;
  for (Cell e : two_cells_of_vertex_[vindex_[y]]) {
    const auto& ve = q_->vertices_of(e);
    if (std::binary_search(ve.begin(), ve.end(), y1) && std::binary_search(ve.begin(), ve.end(), y2))
      found.push_back(e);
  }
  if (found.empty()) return -1;
  if (found.size() > 1)
    fail(Errc::NotSimplicial, "vertices " + std::to_string(y) + "," + std::to_string(y1) + "," +
                                  std::to_string(y2) + " lie in " + std::to_string(found.size()) + " 2-cells");
  return found.front();
}

const VertexPath& PathOracle::minimal_rep(Vertex v, Vertex w) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = minimal_rep_memo_.find({v, w});
    if (it != minimal_rep_memo_.end()) return it->second;
  }
  std::vector<VertexPath> paths = minimal_paths(v, w);
  const PathClass& cls = class_of_checked(paths.front());
  for (const VertexPath& p : paths)
    if (!cls.contains(p))
      fail(Errc::NotFlat, "minimal paths from " + std::to_string(v) + " to " + std::to_string(w) + " split into several classes");
  std::lock_guard<std::mutex> lock(mutex_);
  return minimal_rep_memo_.emplace(std::make_pair(v, w), paths.front()).first->second;
}

const PathClass& PathOracle::meet(const VertexPath& f, const VertexPath& g) const {
  check_positive(f);
  check_positive(g);
  if (f.front() != g.front()) fail(Errc::SourceMismatch, "meet of paths with different start vertices");
  std::vector<const PathClass*> df = divisors(f);
  std::vector<const PathClass*> dg = divisors(g);
  std::set<VertexPath> reps_g;
  for (const PathClass* c : dg) reps_g.insert(c->rep);
  std::vector<const PathClass*> common;
  for (const PathClass* c : df)
    if (reps_g.count(c->rep)) common.push_back(c);
  int best = -1;
  for (const PathClass* c : common) best = std::max(best, c->length);
  std::vector<const PathClass*> at_best;
  for (const PathClass* c : common)
    if (c->length == best) at_best.push_back(c);
  if (at_best.size() != 1)
    fail(Errc::NotUniqueExtremum, "meet: " + std::to_string(at_best.size()) + " maximal common divisors");
  // The meet must dominate every common divisor.
  std::set<VertexPath> dm;
  for (const PathClass* c : divisors(at_best[0]->rep)) dm.insert(c->rep);
  for (const PathClass* c : common)
    if (!dm.count(c->rep))
      fail(Errc::NotUniqueExtremum, "meet does not dominate common divisor " + path_str(c->rep));
  return *at_best[0];
}

const PathClass& PathOracle::join(const VertexPath& f, const VertexPath& g) const {
  check_positive(f);
  check_positive(g);
  if (f.front() != g.front()) fail(Errc::SourceMismatch, "join of paths with different start vertices");
  int bound = static_cast<int>(std::max(f.size(), g.size()) - 1) * std::max(1, q_->diameter());

  std::map<VertexPath, const PathClass*> S;
  auto add_with_divisors = [&](const VertexPath& path, std::deque<const PathClass*>* work) {
    for (const PathClass* c : divisors(path)) {
      if (S.emplace(c->rep, c).second && work) work->push_back(c);
      if (S.size() > opts_.set_cap) fail(Errc::ExplosionGuard, "join closure exceeds set cap");
    }
  };
  add_with_divisors(f, nullptr);
  add_with_divisors(g, nullptr);

  // Square-completion closure; re-sweep because membership tests can start
  // succeeding only after later additions.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<const PathClass*> snapshot;
    for (auto& [rep, c] : S) snapshot.push_back(c);
    for (const PathClass* cls : snapshot) {
      Vertex y = cls->tgt;
      const auto& nb = q_->neighbors(y);
      for (std::size_t a = 0; a < nb.size(); ++a) {
        VertexPath pa = cls->rep;
        pa.push_back(nb[a]);
        if (!S.count(class_of_checked(pa).rep)) continue;
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          VertexPath pb = cls->rep;
          pb.push_back(nb[b]);
          if (!S.count(class_of_checked(pb).rep)) continue;
          Cell e = triangle_two_cell(y, nb[a], nb[b]);
          if (e < 0) continue;
          Vertex z = maps_.raw_farthest(e, y);
          VertexPath ext = cls->rep;
          const VertexPath& uyz = minimal_rep(y, z);
          ext.insert(ext.end(), uyz.begin() + 1, uyz.end());
          if (static_cast<int>(ext.size()) - 1 > bound)
            fail(Errc::ExplosionGuard, "join closure exceeds the delta-power length bound");
          const PathClass& ce = class_of_checked(ext);
          if (!S.count(ce.rep)) {
            add_with_divisors(ce.rep, nullptr);
            changed = true;
          }
        }
      }
    }
  }

  int best = -1;
  for (auto& [rep, c] : S) best = std::max(best, c->length);
  std::vector<const PathClass*> at_best;
  for (auto& [rep, c] : S)
    if (c->length == best) at_best.push_back(c);
  if (at_best.size() != 1)
    fail(Errc::NotUniqueExtremum, "join: " + std::to_string(at_best.size()) + " maximal elements");
  std::set<VertexPath> dm;
  for (const PathClass* c : divisors(at_best[0]->rep)) dm.insert(c->rep);
  for (auto& [rep, c] : S)
    if (!dm.count(rep)) fail(Errc::NotUniqueExtremum, "join closure is not the divisor set of its maximum");
  return *at_best[0];
}

}  // namespace garside
