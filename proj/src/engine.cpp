#include "garside/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace garside {

Letter parse_letter(const std::string& token) {
  if (token.size() < 4 || token[0] != 'e')
    fail(Errc::ParseError, "bad letter '" + token + "'");
  std::string body = token.substr(1);
  Letter l;
  auto caret = body.find('^');
  if (caret != std::string::npos) {
    if (body.substr(caret) != "^-1") fail(Errc::ParseError, "bad exponent in '" + token + "'");
    l.inverse = true;
    body.erase(caret);
  }
  auto at = body.find('@');
  if (at == std::string::npos) fail(Errc::ParseError, "missing '@' in '" + token + "'");
  try {
    std::size_t used = 0;
    l.edge = std::stoi(body.substr(0, at), &used);
    if (used != at) throw std::invalid_argument(body);
    std::string vs = body.substr(at + 1);
    l.apex = std::stoi(vs, &used);
    if (used != vs.size()) throw std::invalid_argument(body);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad letter '" + token + "'");
  }
  return l;
}

std::string format_letter(const Letter& l) {
  std::string s = "e" + std::to_string(l.edge) + "@" + std::to_string(l.apex);
  if (l.inverse) s += "^-1";
  return s;
}

GarsideContext GarsideContext::make(const CellComplex& q, OracleOptions oracle_opts) {
  GarsideContext ctx;
  ctx.q_ = std::make_shared<CellComplex>(q);
  ctx.maps_ = compute_hemisphere_maps(*ctx.q_);

  MhReport mh = check_mh(*ctx.q_);
  if (!mh.mh.pass) fail(Errc::NotMh, mh.mh.witness);

  ctx.oracle_ = std::make_shared<PathOracle>(*ctx.q_, ctx.maps_, oracle_opts);
  CheckResult flat = ctx.oracle_->check_flat();
  if (!flat.pass) fail(Errc::NotFlat, flat.witness);

  ctx.phi_ = find_involution(*ctx.q_);

  const auto& vs = ctx.q_->vertices();
  ctx.vindex_.assign(ctx.q_->cell_count(), -1);
  ctx.two_cells_of_vertex_.resize(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) ctx.vindex_[vs[i]] = static_cast<int>(i);
  for (Cell e : ctx.q_->cells_of_dim(2))
    for (Vertex v : ctx.q_->vertices_of(e)) ctx.two_cells_of_vertex_[ctx.vindex_[v]].push_back(e);

  // Vertex-link simpliciality: every vertex with two distinct neighbours must
  // lie with them in exactly one 2-cell, which is what the square-completion
  // rule consumes.
  for (Vertex y : vs) {
    const auto& nb = ctx.q_->neighbors(y);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        int count = 0;
        for (Cell e : ctx.two_cells_of_vertex_[ctx.vindex_[y]]) {
          const auto& ve = ctx.q_->vertices_of(e);
          if (std::binary_search(ve.begin(), ve.end(), nb[a]) &&
              std::binary_search(ve.begin(), ve.end(), nb[b]))
            ++count;
        }
        if (count != 1)
          fail(Errc::NotSimplicial,
               std::to_string(count) + " 2-cells contain vertices " + std::to_string(y) + "," +
                   std::to_string(nb[a]) + "," + std::to_string(nb[b]));
      }
    }
  }
  return ctx;
}

int GarsideContext::dist(Vertex x, Vertex y) const { return q_->skeleton_distance(x, y); }

bool GarsideContext::between(Vertex x, Vertex y, Vertex z) const {
  return dist(x, y) + dist(y, z) == dist(x, z);
}

Morphism GarsideContext::identity(Vertex x) const {
  q_->vertices_of(x);
  return Morphism{{x}};
}

Morphism GarsideContext::atom(Vertex x, Vertex y) const {
  const auto& nb = q_->neighbors(x);
  if (!std::binary_search(nb.begin(), nb.end(), y))
    fail(Errc::NotPositive, "no edge " + std::to_string(x) + " -> " + std::to_string(y));
  return Morphism{{x, y}};
}

Morphism GarsideContext::simple(Vertex x, Vertex y) const {
  if (x == y) return identity(x);
  return Morphism{{x, y}};
}

Morphism GarsideContext::delta_power(Vertex x, int n) const {
  std::vector<Vertex> pts{x};
  Vertex cur = x;
  for (int i = 0; i < n; ++i) {
    Vertex nxt = phi(cur);
    if (nxt != cur) pts.push_back(nxt);
    cur = nxt;
  }
  return normalize(std::move(pts));
}

int GarsideContext::ell(const Morphism& f) const {
  int total = 0;
  for (std::size_t i = 0; i + 1 < f.pts.size(); ++i) total += dist(f.pts[i], f.pts[i + 1]);
  return total;
}

Morphism GarsideContext::normalize(std::vector<Vertex> pts) const {
  if (pts.empty()) fail(Errc::NotPositive, "empty waypoint chain");
  auto dedupe = [&]() {
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  };
  dedupe();
  bool restart = true;
  while (restart) {
    restart = false;
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
      Vertex x = pts[i], y = pts[i + 1], z = pts[i + 2];
      int dxy = dist(x, y);
      for (Vertex yp : q_->neighbors(y)) {
        if (dist(x, yp) == dxy + 1 && between(y, yp, z)) {
          pts[i + 1] = yp;
          dedupe();
          restart = true;
          break;
        }
      }
      if (restart) break;
    }
  }
  return Morphism{std::move(pts)};
}

Morphism GarsideContext::compose(const Morphism& f, const Morphism& g) const {
  if (f.target() != g.source())
    fail(Errc::SourceMismatch, "compose: target " + std::to_string(f.target()) + " vs source " + std::to_string(g.source()));
  std::vector<Vertex> pts = f.pts;
  pts.insert(pts.end(), g.pts.begin() + 1, g.pts.end());
  return normalize(std::move(pts));
}

Morphism GarsideContext::apply_phi(const Morphism& f) const {
  Morphism out = f;
  for (Vertex& v : out.pts) v = phi(v);
  return out;
}

Vertex GarsideContext::simple_meet(Vertex x, Vertex y1, Vertex y2) const {
  int best = -1;
  std::vector<Vertex> arg;
  for (Vertex m : q_->vertices()) {
    if (between(x, m, y1) && between(x, m, y2)) {
      int d = dist(x, m);
      if (d > best) {
        best = d;
        arg = {m};
      } else if (d == best) {
        arg.push_back(m);
      }
    }
  }
  if (arg.size() != 1)
    fail(Errc::NotUniqueExtremum, "simple meet of (" + std::to_string(x) + ";" + std::to_string(y1) + "," +
                                      std::to_string(y2) + ") has " + std::to_string(arg.size()) + " maximizers");
  return arg[0];
}

Vertex GarsideContext::simple_join(Vertex x, Vertex y1, Vertex y2) const {
  int best = -1;
  std::vector<Vertex> arg;
  for (Vertex j : q_->vertices()) {
    if (between(x, y1, j) && between(x, y2, j)) {
      int d = dist(x, j);
      if (best < 0 || d < best) {
        best = d;
        arg = {j};
      } else if (d == best) {
        arg.push_back(j);
      }
    }
  }
  if (arg.size() != 1)
    fail(Errc::NotUniqueExtremum, "simple join of (" + std::to_string(x) + ";" + std::to_string(y1) + "," +
                                      std::to_string(y2) + ") has " + std::to_string(arg.size()) + " minimizers");
  return arg[0];
}

Morphism GarsideContext::meet(const Morphism& f, const Morphism& g) const {
  if (f.source() != g.source()) fail(Errc::SourceMismatch, "meet needs a common source");
  std::vector<Vertex> acc{f.source()};
  Morphism a = f, b = g;
  while (!a.is_identity() && !b.is_identity()) {
    Vertex x = a.source();
    Vertex m = simple_meet(x, a.pts[1], b.pts[1]);
    if (m == x) break;
    acc.push_back(m);
    auto cancel = [&](const Morphism& h) {
      std::vector<Vertex> pts;
      if (m == h.pts[1]) {
        pts.assign(h.pts.begin() + 1, h.pts.end());
      } else {
        pts.push_back(m);
        pts.insert(pts.end(), h.pts.begin() + 1, h.pts.end());
      }
      return normalize(std::move(pts));
    };
    a = cancel(a);
    b = cancel(b);
  }
  return normalize(std::move(acc));
}

bool GarsideContext::left_divides(const Morphism& f, const Morphism& g) const {
  return meet(f, g) == f;
}

Morphism GarsideContext::left_complement(const Morphism& f, const Morphism& g) const {
  if (!left_divides(f, g))
    fail(Errc::SourceMismatch, "left_complement: first argument does not divide the second");
  Morphism rest = g;
  for (std::size_t i = 0; i + 1 < f.pts.size(); ++i) {
    Vertex x = f.pts[i], m = f.pts[i + 1];
    // Cancel u(x,m) from the head of rest; m lies on a geodesic to the head
    // target because u(x,m) divides rest.
    std::vector<Vertex> pts;
    if (m == rest.pts[1]) {
      pts.assign(rest.pts.begin() + 1, rest.pts.end());
    } else {
      pts.push_back(m);
      pts.insert(pts.end(), rest.pts.begin() + 1, rest.pts.end());
    }
    rest = normalize(std::move(pts));
  }
  return rest;
}

std::vector<Morphism> GarsideContext::divisors(const Morphism& f) const {
  std::set<Morphism> seen{identity(f.source())};
  std::deque<Morphism> queue{identity(f.source())};
  while (!queue.empty()) {
    Morphism h = std::move(queue.front());
    queue.pop_front();
    for (Vertex y : q_->neighbors(h.target())) {
      Morphism d = compose(h, atom(h.target(), y));
      if (seen.count(d)) continue;
      if (left_divides(d, f)) {
        seen.insert(d);
        queue.push_back(std::move(d));
      }
    }
  }
  return std::vector<Morphism>(seen.begin(), seen.end());
}

Cell GarsideContext::triangle_two_cell(Vertex y, Vertex y1, Vertex y2) const {
  std::vector<Cell> found;
  for (Cell e : two_cells_of_vertex_[vindex_[y]]) {
    const auto& ve = q_->vertices_of(e);
    if (std::binary_search(ve.begin(), ve.end(), y1) && std::binary_search(ve.begin(), ve.end(), y2))
      found.push_back(e);
  }
  if (found.empty()) return -1;
  if (found.size() > 1)
    fail(Errc::NotSimplicial, "vertices " + std::to_string(y) + "," + std::to_string(y1) + "," +
                                  std::to_string(y2) + " lie in several 2-cells");
  return found.front();
}

Morphism GarsideContext::join(const Morphism& f, const Morphism& g) const {
  if (f.source() != g.source()) fail(Errc::SourceMismatch, "join needs a common source");
  int n = std::max(f.factor_count(), g.factor_count());
  int bound = n * std::max(1, delta_length(f.source()));

  std::set<Morphism> S;
  auto add_with_divisors = [&](const Morphism& h) {
    bool added = false;
    for (Morphism& d : divisors(h)) added |= S.insert(std::move(d)).second;
    return added;
  };
  add_with_divisors(f);
  add_with_divisors(g);

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Morphism> snapshot(S.begin(), S.end());
    for (const Morphism& h : snapshot) {
      Vertex y = h.target();
      const auto& nb = q_->neighbors(y);
      for (std::size_t a = 0; a < nb.size(); ++a) {
        if (!S.count(compose(h, atom(y, nb[a])))) continue;
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          if (!S.count(compose(h, atom(y, nb[b])))) continue;
          Cell e = triangle_two_cell(y, nb[a], nb[b]);
          if (e < 0) continue;
          Vertex z = maps_.raw_farthest(e, y);
          Morphism cand = compose(h, simple(y, z));
          if (ell(cand) > bound)
            fail(Errc::ExplosionGuard, "join closure exceeded the delta-power bound");
          if (!S.count(cand)) changed |= add_with_divisors(cand);
        }
      }
    }
  }

  int best = -1;
  for (const Morphism& h : S) best = std::max(best, ell(h));
  std::vector<Morphism> at_best;
  for (const Morphism& h : S)
    if (ell(h) == best) at_best.push_back(h);
  if (at_best.size() != 1)
    fail(Errc::NotUniqueExtremum, "join: " + std::to_string(at_best.size()) + " maximal elements");
  for (const Morphism& h : S)
    if (!left_divides(h, at_best[0]))
      fail(Errc::NotUniqueExtremum, "join closure is not the divisor set of its maximum");
  return at_best[0];
}

VertexPath GarsideContext::representative_path(const Morphism& f) const {
  VertexPath out{f.source()};
  for (std::size_t i = 0; i + 1 < f.pts.size(); ++i) {
    Vertex cur = f.pts[i], goal = f.pts[i + 1];
    while (cur != goal) {
      int d = dist(cur, goal);
      for (Vertex nb : q_->neighbors(cur)) {
        if (dist(nb, goal) == d - 1) {
          out.push_back(nb);
          cur = nb;
          break;
        }
      }
    }
  }
  return out;
}

GroupoidElement GarsideContext::word_to_element(const SalvettiComplex& sal,
                                                const std::vector<Letter>& word, Vertex start) const {
  if (word.empty() && start < 0)
    fail(Errc::NotComposable, "empty word without a start vertex");
  Vertex cur;
  if (!word.empty()) {
    const Letter& l0 = word.front();
    Cell sc = sal.sal_cell(l0.edge, l0.apex);
    auto [u, v] = sal.edge_source_target(sc);
    cur = l0.inverse ? v : u;
    if (start >= 0 && start != cur)
      fail(Errc::NotComposable, "word starts at " + std::to_string(cur) + ", expected " + std::to_string(start));
  } else {
    cur = start;
  }

  GroupoidElement g{0, identity(cur)};
  for (const Letter& l : word) {
    Cell sc = sal.sal_cell(l.edge, l.apex);
    auto [u, v] = sal.edge_source_target(sc);
    if (!l.inverse) {
      if (g.pos.target() != u)
        fail(Errc::NotComposable, "letter " + format_letter(l) + " does not start at " + std::to_string(g.pos.target()));
      g.pos = compose(g.pos, atom(u, v));
    } else {
      if (g.pos.target() != v)
        fail(Errc::NotComposable, "letter " + format_letter(l) + " does not start at " + std::to_string(g.pos.target()));
      // a^-1 = a* delta^-1 with a* = u(target, phi(source)); pulling the
      // denominator to the left twists the positive part by phi.
      g.pos = compose(g.pos, simple(v, phi(u)));
      g.pos = apply_phi(g.pos);
      g.p += 1;
    }
  }
  while (g.p > 0 && !g.pos.is_identity() && g.pos.pts[1] == phi(g.pos.pts[0])) {
    g.pos.pts.erase(g.pos.pts.begin());
    g.p -= 1;
  }
  return g;
}

Vertex GarsideContext::element_source(const GroupoidElement& g) const {
  Vertex s = g.pos.source();
  return (g.p % 2) ? phi(s) : s;
}

Vertex GarsideContext::element_target(const GroupoidElement& g) const { return g.pos.target(); }

bool GarsideContext::equal(const SalvettiComplex& sal, const std::vector<Letter>& w1,
                           const std::vector<Letter>& w2, Vertex start1, Vertex start2) const {
  GroupoidElement a = word_to_element(sal, w1, start1);
  GroupoidElement b = word_to_element(sal, w2, start2);
  if (element_source(a) != element_source(b) || element_target(a) != element_target(b))
    fail(Errc::SourceMismatch, "words do not share endpoints");
  return a == b;
}

bool GarsideContext::is_trivial(const SalvettiComplex& sal, const std::vector<Letter>& w, Vertex start) const {
  GroupoidElement g = word_to_element(sal, w, start);
  return g.p == 0 && g.pos.is_identity();
}

std::string GarsideContext::format_element(const GroupoidElement& g) const {
  std::ostringstream os;
  os << "D^-" << g.p << " |";
  for (Vertex v : g.pos.pts) os << " " << v;
  return os.str();
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::vector<Morphism> enumerate_morphisms(const GarsideContext& ctx, int max_len) {
  std::set<Morphism> out;
  const CellComplex& q = ctx.complex();
  for (Vertex x : q.vertices()) {
    std::deque<VertexPath> queue{{x}};
    while (!queue.empty()) {
      VertexPath p = std::move(queue.front());
      queue.pop_front();
      out.insert(ctx.normalize(p));
      if (static_cast<int>(p.size()) - 1 < max_len) {
        for (Vertex nb : q.neighbors(p.back())) {
          VertexPath next = p;
          next.push_back(nb);
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return std::vector<Morphism>(out.begin(), out.end());
}

VerifyReport verify_garside(const GarsideContext& ctx, int max_len, int cancel_len) {
  VerifyReport report;
  const CellComplex& q = ctx.complex();
  const PathOracle& oracle = ctx.oracle();
  auto push = [&](const std::string& name, bool pass, const std::string& witness) {
    report.checks.push_back({name, pass, pass ? "" : witness});
  };

  // Enumerate paths and their normal forms once.
  std::map<VertexPath, Morphism> nf_of_path;
  for (Vertex x : q.vertices()) {
    std::deque<VertexPath> queue{{x}};
    while (!queue.empty()) {
      VertexPath p = std::move(queue.front());
      queue.pop_front();
      nf_of_path.emplace(p, ctx.normalize(p));
      if (static_cast<int>(p.size()) - 1 < max_len) {
        for (Vertex nb : q.neighbors(p.back())) {
          VertexPath next = p;
          next.push_back(nb);
          queue.push_back(std::move(next));
        }
      }
    }
  }
  std::set<Morphism> morphisms;
  for (auto& [p, nf] : nf_of_path) morphisms.insert(nf);

  // Normal-form soundness: equal oracle classes iff equal normal forms, and
  // the normal form's representative lies in the class.
  {
    bool pass = true;
    std::string witness;
    std::map<VertexPath, Morphism> class_nf;
    for (auto& [p, nf] : nf_of_path) {
      const PathClass& cls = oracle.path_class(p);
      auto [it, inserted] = class_nf.emplace(cls.rep, nf);
      if (!inserted && it->second != nf) {
        pass = false;
        witness = "paths in one class map to different normal forms near rep " + std::to_string(cls.rep.front());
        break;
      }
      if (!cls.contains(ctx.representative_path(nf))) {
        pass = false;
        witness = "normal-form representative leaves its oracle class";
        break;
      }
    }
    if (pass) {
      // Distinct normal forms must be inequivalent.
      std::set<Morphism> seen;
      for (auto& [rep, nf] : class_nf) {
        if (!seen.insert(nf).second) {
          pass = false;
          witness = "two oracle classes share a normal form";
          break;
        }
      }
    }
    push("normal-form-soundness", pass, witness);
  }

  // Homogeneity of ell under composition.
  {
    bool pass = true;
    std::string witness;
    for (const Morphism& f : morphisms) {
      for (const Morphism& g : morphisms) {
        if (f.target() != g.source()) continue;
        if (ctx.ell(ctx.compose(f, g)) != ctx.ell(f) + ctx.ell(g)) {
          pass = false;
          witness = "ell not additive";
          break;
        }
      }
      if (!pass) break;
    }
    push("homogeneity", pass, witness);
  }

  // Cancellativity sample via oracle classes; frames a, b are atoms.
  {
    bool pass = true;
    std::string witness;
    std::vector<Morphism> small;
    for (const Morphism& f : morphisms)
      if (ctx.ell(f) <= cancel_len) small.push_back(f);
    for (const Morphism& f : small) {
      if (!pass) break;
      for (const Morphism& g : small) {
        if (f.source() != g.source() || f.target() != g.target() || f == g) continue;
        VertexPath pf = ctx.representative_path(f);
        VertexPath pg = ctx.representative_path(g);
        bool fg_eq = oracle.equivalent(pf, pg);
        for (Vertex a0 : q.neighbors(f.source())) {
          VertexPath apf{a0};
          apf.insert(apf.end(), pf.begin(), pf.end());
          VertexPath apg{a0};
          apg.insert(apg.end(), pg.begin(), pg.end());
          // a runs a0 -> source; it frames on the left.
          for (Vertex b1 : q.neighbors(f.target())) {
            VertexPath afb = apf;
            afb.push_back(b1);
            VertexPath agb = apg;
            agb.push_back(b1);
            if (oracle.equivalent(afb, agb) != fg_eq) {
              pass = false;
              witness = "afb ~ agb disagrees with f ~ g";
              break;
            }
          }
          if (!pass) break;
        }
        if (!pass) break;
      }
    }
    push("cancellativity", pass, witness);
  }

  // Naturality f delta(y) = delta(x) phi(f), checked on all enumerated
  // morphisms (atoms included).
  {
    bool pass = true;
    std::string witness;
    for (const Morphism& f : morphisms) {
      Morphism lhs = ctx.compose(f, ctx.delta(f.target()));
      Morphism rhs = ctx.compose(ctx.delta(f.source()), ctx.apply_phi(f));
      if (lhs != rhs) {
        pass = false;
        witness = "naturality fails at a morphism from " + std::to_string(f.source());
        break;
      }
    }
    push("delta-naturality", pass, witness);
  }

  // Atoms are simple: a u(target, phi(source)) = delta(source).
  {
    bool pass = true;
    std::string witness;
    for (Vertex x : q.vertices()) {
      for (Vertex y : q.neighbors(x)) {
        Morphism prod = ctx.compose(ctx.atom(x, y), ctx.simple(y, ctx.phi(x)));
        if (prod != ctx.delta(x)) {
          pass = false;
          witness = "atom " + std::to_string(x) + "->" + std::to_string(y) + " is not simple";
          break;
        }
      }
      if (!pass) break;
    }
    push("atoms-simple", pass, witness);
  }

  // Meets, joins, divisibility: engine against oracle for all pairs with a
  // common source.
  {
    bool meets_pass = true, joins_pass = true, div_pass = true, head_pass = true, bound_pass = true;
    std::string meets_w, joins_w, div_w, head_w, bound_w;
    for (const Morphism& f : morphisms) {
      VertexPath pf = ctx.representative_path(f);
      if (head_pass && !f.is_identity()) {
        Morphism head = ctx.simple(f.source(), f.pts[1]);
        if (ctx.meet(ctx.delta(f.source()), f) != head) {
          head_pass = false;
          head_w = "first factor differs from meet(delta, f)";
        }
      }
      if (bound_pass) {
        Morphism dp = ctx.delta_power(f.source(), f.factor_count());
        if (!ctx.left_divides(f, dp)) {
          bound_pass = false;
          bound_w = "f does not divide delta^n";
        }
      }
      for (const Morphism& g : morphisms) {
        if (f.source() != g.source()) continue;
        VertexPath pg = ctx.representative_path(g);
        if (meets_pass) {
          try {
            Morphism m = ctx.meet(f, g);
            const PathClass& om = oracle.meet(pf, pg);
            if (oracle.path_class(ctx.representative_path(m)).rep != om.rep) {
              meets_pass = false;
              meets_w = "engine meet disagrees with oracle";
            }
          } catch (const Error& e) {
            meets_pass = false;
            meets_w = e.what();
          }
        }
        if (joins_pass) {
          try {
            Morphism j = ctx.join(f, g);
            const PathClass&oj = oracle.join(pf, pg);
            if (oracle.path_class(ctx.representative_path(j)).rep != oj.rep) {
              joins_pass = false;
              joins_w = "engine join disagrees with oracle";
            }
          } catch (const Error& e) {
            joins_pass = false;
            joins_w = e.what();
          }
        }
        if (div_pass) {
          bool engine = ctx.left_divides(f, g);
          bool oracle_div = false;
          for (const PathClass* c : oracle.divisors(pg)) {
            if (c->rep == oracle.path_class(pf).rep) {
              oracle_div = true;
              break;
            }
          }
          if (engine != oracle_div) {
            div_pass = false;
            div_w = "left_divides disagrees with oracle divisor set";
          }
        }
      }
    }
    push("meets", meets_pass, meets_w);
    push("joins", joins_pass, joins_w);
    push("divisibility", div_pass, div_w);
    push("head-law", head_pass, head_w);
    push("delta-bound", bound_pass, bound_w);
  }

  return report;
}

}  // namespace garside
