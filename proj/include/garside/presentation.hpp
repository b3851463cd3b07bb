#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "garside/engine.hpp"
#include "garside/linalg.hpp"

namespace garside {

/// Presentation of pi_1 of a Salvetti complex: one generator per directed
/// 1-cell, one relation per 2-cell equating its two positive boundary words.
struct Presentation {
  struct Gen {
    std::string name;
    Vertex src = -1, tgt = -1;
    Cell sal_cell = -1;
    bool alive = true;
  };
  /// Signed generator references, 1-based: +k / -k refer to gens[k-1].
  using Word = std::vector<int>;

  std::vector<Gen> gens;
  std::vector<Word> relators;

  // Spanning-tree data, filled by the collapse step.
  Vertex base = -1;
  std::vector<Vertex> parent;      // by vertex id; -1 at the base
  std::vector<Cell> parent_edge;   // Q-edge towards the parent

  int alive_count() const;
  std::vector<int> alive_gens() const;
};

Presentation presentation_from_salvetti(const GarsideContext& ctx, const SalvettiComplex& sal);

/// Kills one directed lift per spanning-tree edge of Q.
void tietze_collapse_tree(Presentation& p, const GarsideContext& ctx, const SalvettiComplex& sal);

/// Eliminates generators occurring exactly once in some relator until no
/// such move remains; free and cyclic reduction throughout.
void tietze_eliminate(Presentation& p);

void reduce_presentation(Presentation& p, const GarsideContext& ctx, const SalvettiComplex& sal);

struct Abelianization {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};
Abelianization abelianize(const Presentation& p);

/// `gen <name>` lines, then `rel <word> = <word>` lines.
void emit_presentation(const Presentation& p, std::ostream& out);

/// The loop at the base vertex represented by a generator: tree path to its
/// source, the letter, tree path back. Valid once the tree is collapsed.
std::vector<Letter> generator_loop_word(const Presentation& p, const SalvettiComplex& sal, int gen);

/// Relator shape tests on two-generator presentations, up to rotation,
/// inversion and swapping the generators.
bool is_braid_relator(const Presentation::Word& w);        // aba = bab
bool is_commutation_relator(const Presentation::Word& w);  // ab = ba

}  // namespace garside
