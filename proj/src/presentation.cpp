#include "garside/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>

namespace garside {

int Presentation::alive_count() const {
  return static_cast<int>(std::count_if(gens.begin(), gens.end(), [](const Gen& g) { return g.alive; }));
}

std::vector<int> Presentation::alive_gens() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].alive) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

using Word = Presentation::Word;

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

void free_reduce(Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  w = std::move(out);
}

void cyclic_reduce(Word& w) {
  free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    free_reduce(w);
  }
}

Word canonical_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word inv = invert(w);
  for (const Word* cand : {&w, &inv}) {
    Word rot = *cand;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

void normalize_relators(Presentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (Word& r : p.relators) {
    cyclic_reduce(r);
    if (r.empty()) continue;
    Word canon = canonical_rotation(r);
    if (seen.insert(canon).second) out.push_back(std::move(canon));
  }
  p.relators = std::move(out);
}

// Both positive boundary arcs of the Q 2-cell e from v to the farthest
// vertex of e, as (edge, from-vertex) steps.
std::pair<std::vector<std::pair<Cell, Vertex>>, std::vector<std::pair<Cell, Vertex>>>
boundary_arcs(const GarsideContext& ctx, Cell e, Vertex v) {
  const CellComplex& q = ctx.complex();
  std::map<Vertex, std::vector<std::pair<Cell, Vertex>>> incident;  // vertex -> (edge, other)
  for (Cell ep : q.proper_faces(e)) {
    if (q.dim(ep) != 1) continue;
    auto [a, b] = q.edge_endpoints(ep);
    incident[a].emplace_back(ep, b);
    incident[b].emplace_back(ep, a);
  }
  for (auto& [vv, inc] : incident) {
    if (inc.size() != 2)
      fail(Errc::NonRegular, "2-cell " + std::to_string(e) + " boundary is not a cycle at vertex " + std::to_string(vv));
    std::sort(inc.begin(), inc.end(), [](auto& l, auto& r) {
      return l.second != r.second ? l.second < r.second : l.first < r.first;
    });
  }
  Vertex z = ctx.maps().raw_farthest(e, v);

  auto walk = [&](std::pair<Cell, Vertex> first) {
    std::vector<std::pair<Cell, Vertex>> arc;
    Vertex cur = v;
    Cell via = first.first;
    Vertex nxt = first.second;
    while (true) {
      arc.emplace_back(via, cur);
      cur = nxt;
      if (cur == z) break;
      const auto& inc = incident.at(cur);
      auto step = (inc[0].first == via) ? inc[1] : inc[0];
      via = step.first;
      nxt = step.second;
      if (arc.size() > incident.size())
        fail(Errc::NonRegular, "boundary walk of 2-cell " + std::to_string(e) + " does not reach the farthest vertex");
    }
    return arc;
  };
  const auto& start = incident.at(v);
  return {walk(start[0]), walk(start[1])};
}

}  // namespace

Presentation presentation_from_salvetti(const GarsideContext& ctx, const SalvettiComplex& sal) {
  Presentation p;
  const CellComplex& sc = sal.complex;
  std::map<Cell, int> gen_of_sal;
  for (Cell c = 0; c < sc.cell_count(); ++c) {
    if (sc.dim(c) != 1) continue;
    Presentation::Gen g;
    auto [src, tgt] = sal.edge_source_target(c);
    g.src = src;
    g.tgt = tgt;
    g.sal_cell = c;
    g.name = "e" + std::to_string(sal.project(c)) + "@" + std::to_string(src);
    gen_of_sal[c] = static_cast<int>(p.gens.size());
    p.gens.push_back(std::move(g));
  }

  for (Cell c = 0; c < sc.cell_count(); ++c) {
    if (sc.dim(c) != 2) continue;
    Cell e = sal.project(c);
    Vertex v = sal.apex[static_cast<std::size_t>(c)];
    auto [arc1, arc2] = boundary_arcs(ctx, e, v);
    auto word_of = [&](const std::vector<std::pair<Cell, Vertex>>& arc) {
      Word w;
      for (auto& [edge, from] : arc) w.push_back(gen_of_sal.at(sal.sal_cell(edge, from)) + 1);
      return w;
    };
    Word lhs = word_of(arc1);
    Word rhs = word_of(arc2);
    Word relator = lhs;
    Word ri = invert(rhs);
    relator.insert(relator.end(), ri.begin(), ri.end());
    p.relators.push_back(std::move(relator));
  }
  return p;
}

void tietze_collapse_tree(Presentation& p, const GarsideContext& ctx, const SalvettiComplex& sal) {
  const CellComplex& q = ctx.complex();
  p.base = q.vertices().front();
  p.parent.assign(q.cell_count(), -1);
  p.parent_edge.assign(q.cell_count(), -1);

  std::map<Cell, int> gen_of_sal;
  for (std::size_t i = 0; i < p.gens.size(); ++i) gen_of_sal[p.gens[i].sal_cell] = static_cast<int>(i);

  std::set<Vertex> seen{p.base};
  std::deque<Vertex> queue{p.base};
  std::vector<int> killed;
  while (!queue.empty()) {
    Vertex cur = queue.front();
    queue.pop_front();
    for (Vertex nb : q.neighbors(cur)) {
      if (seen.count(nb)) continue;
      seen.insert(nb);
      Cell edge = q.edges_between(cur, nb).front();
      p.parent[nb] = cur;
      p.parent_edge[nb] = edge;
      killed.push_back(gen_of_sal.at(sal.sal_cell(edge, cur)));
      queue.push_back(nb);
    }
  }
  for (int g : killed) p.gens[static_cast<std::size_t>(g)].alive = false;
  std::set<int> dead(killed.begin(), killed.end());
  for (Word& r : p.relators) {
    Word out;
    for (int x : r)
      if (!dead.count(std::abs(x) - 1)) out.push_back(x);
    r = std::move(out);
  }
  normalize_relators(p);
}

void tietze_eliminate(Presentation& p) {
  normalize_relators(p);
  while (true) {
    // Pick the (relator, generator) pair with a single occurrence that keeps
    // the substitution small; ties break on generator then relator index.
    int best_rel = -1, best_gen = -1;
    long best_cost = -1;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
      const Word& r = p.relators[ri];
      std::map<int, int> count;
      for (int x : r) ++count[std::abs(x) - 1];
      for (auto& [g, k] : count) {
        if (k != 1) continue;
        long occurrences = 0;
        for (const Word& other : p.relators)
          for (int x : other)
            if (std::abs(x) - 1 == g) ++occurrences;
        long cost = static_cast<long>(r.size() - 1) * (occurrences - 1);
        if (best_rel < 0 || cost < best_cost ||
            (cost == best_cost && (g < best_gen || (g == best_gen && static_cast<int>(ri) < best_rel)))) {
          best_rel = static_cast<int>(ri);
          best_gen = g;
          best_cost = cost;
        }
      }
    }
    if (best_rel < 0) break;

    Word r = p.relators[static_cast<std::size_t>(best_rel)];
    // Rotate the single occurrence of best_gen to the front.
    std::size_t at = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (std::abs(r[i]) - 1 == best_gen) at = i;
    std::rotate(r.begin(), r.begin() + at, r.end());
    Word rest(r.begin() + 1, r.end());
    // r = g^eps * rest = 1  =>  g^eps = rest^-1.
    Word def = (r[0] > 0) ? invert(rest) : rest;

    p.relators.erase(p.relators.begin() + best_rel);
    p.gens[static_cast<std::size_t>(best_gen)].alive = false;
    for (Word& w : p.relators) {
      Word out;
      for (int x : w) {
        if (std::abs(x) - 1 != best_gen) {
          out.push_back(x);
        } else if (x > 0) {
          out.insert(out.end(), def.begin(), def.end());
        } else {
          Word di = invert(def);
          out.insert(out.end(), di.begin(), di.end());
        }
      }
      w = std::move(out);
    }
    normalize_relators(p);
  }
}

void reduce_presentation(Presentation& p, const GarsideContext& ctx, const SalvettiComplex& sal) {
  tietze_collapse_tree(p, ctx, sal);
  tietze_eliminate(p);
}

namespace {

// Smith normal form over the integers; returns the diagonal entries.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  std::vector<Int> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r0 = 0, c0 = 0;
  auto abs = [](const Int& x) { return x < 0 ? Int(-x) : x; };
  while (r0 < rows && c0 < cols) {
    // Find a nonzero pivot of least absolute value.
    std::size_t pr = rows, pc = cols;
    Int best = 0;
    for (std::size_t i = r0; i < rows; ++i)
      for (std::size_t j = c0; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
          best = abs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[r0], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r0 + 1; i < rows; ++i) {
        if (m[i][c0] == 0) continue;
        Int qout = m[i][c0] / m[r0][c0];
        for (std::size_t j = c0; j < cols; ++j) m[i][j] -= qout * m[r0][j];
        if (m[i][c0] != 0) {
          std::swap(m[r0], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = c0 + 1; j < cols; ++j) {
        if (m[r0][j] == 0) continue;
        Int qout = m[r0][j] / m[r0][c0];
        for (std::size_t i = r0; i < rows; ++i) m[i][j] -= qout * m[i][c0];
        if (m[r0][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m[r0][c0]));
    ++r0;
    ++c0;
  }
  // Fix the divisibility chain.
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        Int g = boost::multiprecision::gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  return diag;
}

}  // namespace

Abelianization abelianize(const Presentation& p) {
  std::vector<int> alive = p.alive_gens();
  std::map<int, int> col;
  for (std::size_t i = 0; i < alive.size(); ++i) col[alive[i]] = static_cast<int>(i);
  std::vector<std::vector<Int>> m;
  for (const Word& r : p.relators) {
    std::vector<Int> row(alive.size(), 0);
    for (int x : r) {
      auto it = col.find(std::abs(x) - 1);
      if (it == col.end()) continue;  // dead generators act trivially
      row[static_cast<std::size_t>(it->second)] += (x > 0 ? 1 : -1);
    }
    m.push_back(std::move(row));
  }
  Abelianization ab;
  std::vector<Int> diag = smith_diagonal(std::move(m));
  int nonzero = 0;
  for (const Int& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) ab.torsion.push_back(d);
  }
  ab.free_rank = static_cast<int>(alive.size()) - nonzero;
  return ab;
}

void emit_presentation(const Presentation& p, std::ostream& out) {
  for (const auto& g : p.gens)
    if (g.alive) out << "gen " << g.name << "\n";
  for (const Word& r : p.relators) {
    std::size_t split = 0;
    while (split < r.size() && r[split] > 0) ++split;
    bool tail_negative = true;
    for (std::size_t i = split; i < r.size(); ++i)
      if (r[i] > 0) tail_negative = false;
    auto emit_word = [&](auto begin, auto end, bool as_inverse_reversed) {
      if (begin == end) {
        out << "1";
        return;
      }
      bool first = true;
      if (!as_inverse_reversed) {
        for (auto it = begin; it != end; ++it) {
          out << (first ? "" : " ") << p.gens[static_cast<std::size_t>(std::abs(*it) - 1)].name << (*it < 0 ? "^-1" : "");
          first = false;
        }
      } else {
        for (auto it = std::make_reverse_iterator(end); it != std::make_reverse_iterator(begin); ++it) {
          out << (first ? "" : " ") << p.gens[static_cast<std::size_t>(std::abs(*it) - 1)].name << (*it < 0 ? "" : "^-1");
          first = false;
        }
      }
    };
    out << "rel ";
    if (tail_negative) {
      emit_word(r.begin(), r.begin() + static_cast<long>(split), false);
      out << " = ";
      emit_word(r.begin() + static_cast<long>(split), r.end(), true);
    } else {
      emit_word(r.begin(), r.end(), false);
      out << " = 1";
    }
    out << "\n";
  }
}

std::vector<Letter> generator_loop_word(const Presentation& p, const SalvettiComplex& sal, int gen) {
  if (p.base < 0) fail(Errc::ParseError, "loop words need the collapsed tree");
  const Presentation::Gen& g = p.gens[static_cast<std::size_t>(gen)];
  auto tree_path = [&](Vertex v) {
    std::vector<Letter> up;  // from v back to base
    while (v != p.base) {
      Vertex par = p.parent[v];
      up.push_back({p.parent_edge[v], par, false});  // letter par -> v
      v = par;
    }
    std::reverse(up.begin(), up.end());
    return up;  // base -> original v
  };
  std::vector<Letter> word = tree_path(g.src);
  word.push_back({sal.project(g.sal_cell), g.src, false});
  std::vector<Letter> back = tree_path(g.tgt);
  std::reverse(back.begin(), back.end());
  for (Letter& l : back) l.inverse = true;
  word.insert(word.end(), back.begin(), back.end());
  return word;
}

namespace {

bool matches_pattern(const Word& w, const std::vector<int>& pattern) {
  // Patterns use 1,2 for the two generators; sign carried separately.
  if (w.size() != pattern.size()) return false;
  std::map<int, int> assign;  // pattern symbol -> signed generator
  std::set<int> used;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int sym = std::abs(pattern[i]);
    int want = pattern[i] > 0 ? w[i] : -w[i];
    auto it = assign.find(sym);
    if (it == assign.end()) {
      if (used.count(std::abs(want))) return false;
      assign[sym] = want;
      used.insert(std::abs(want));
    } else if (it->second != want) {
      return false;
    }
  }
  return true;
}

bool relator_matches(const Word& w, const std::vector<int>& pattern) {
  Word r = w;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (matches_pattern(r, pattern)) return true;
    Word inv = invert(r);
    if (matches_pattern(inv, pattern)) return true;
  }
  return false;
}

}  // namespace

bool is_braid_relator(const Word& w) {
  // a b a b^-1 a^-1 b^-1
  return relator_matches(w, {1, 2, 1, -2, -1, -2});
}

bool is_commutation_relator(const Word& w) {
  return relator_matches(w, {1, 2, -1, -2});
}

}  // namespace garside
