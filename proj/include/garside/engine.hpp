#pragma once

#include <memory>
#include <string>
#include <vector>

#include "garside/cell_complex.hpp"
#include "garside/mh.hpp"
#include "garside/paths.hpp"
#include "garside/salvetti.hpp"

namespace garside {

/// A morphism in left-weighted normal form: a chain of simples u(x,y) stored
/// as its waypoint sequence. pts[0] is the source; factor i runs from pts[i]
/// to pts[i+1]. The identity is a single waypoint.
struct Morphism {
  std::vector<Vertex> pts;

  Vertex source() const { return pts.front(); }
  Vertex target() const { return pts.back(); }
  int factor_count() const { return static_cast<int>(pts.size()) - 1; }
  bool is_identity() const { return pts.size() == 1; }
  auto operator<=>(const Morphism&) const = default;
};

/// delta^-p * pos with a left-sided denominator chain; canonical when p = 0
/// or delta at the source of pos does not left-divide pos.
struct GroupoidElement {
  int p = 0;
  Morphism pos;
  auto operator<=>(const GroupoidElement&) const = default;
};

/// Signed Salvetti edge letter <edge; apex>^(+-1).
struct Letter {
  Cell edge = -1;
  Vertex apex = -1;
  bool inverse = false;
};

Letter parse_letter(const std::string& token);  // ParseError
std::string format_letter(const Letter& l);

/// Verified FISMH complex with the derived structure the engine needs. All
/// simple arithmetic reduces to the betweenness predicate on the distance
/// table.
class GarsideContext {
 public:
  /// Runs check_mh, check_flat, find_involution and the vertex-link
  /// simpliciality test; throws NotMh / NotFlat / NotInvolutive /
  /// NotSimplicial in that order.
  static GarsideContext make(const CellComplex& q, OracleOptions oracle_opts = {});

  const CellComplex& complex() const { return *q_; }
  const HemisphereMaps& maps() const { return maps_; }
  const Involution& involution() const { return phi_; }
  const PathOracle& oracle() const { return *oracle_; }

  Vertex phi(Vertex v) const { return phi_(v); }
  int dist(Vertex x, Vertex y) const;
  bool between(Vertex x, Vertex y, Vertex z) const;  // d(x,y)+d(y,z) = d(x,z)
  int delta_length(Vertex x) const { return dist(x, phi(x)); }

  Morphism identity(Vertex x) const;
  Morphism atom(Vertex x, Vertex y) const;
  Morphism simple(Vertex x, Vertex y) const;
  Morphism delta(Vertex x) const { return simple(x, phi(x)); }
  Morphism delta_power(Vertex x, int n) const;

  int ell(const Morphism& f) const;
  Morphism normalize(std::vector<Vertex> pts) const;
  Morphism compose(const Morphism& f, const Morphism& g) const;  // SourceMismatch
  Morphism apply_phi(const Morphism& f) const;

  Vertex simple_meet(Vertex x, Vertex y1, Vertex y2) const;  // NotUniqueExtremum
  Vertex simple_join(Vertex x, Vertex y1, Vertex y2) const;

  Morphism meet(const Morphism& f, const Morphism& g) const;
  Morphism join(const Morphism& f, const Morphism& g) const;
  bool left_divides(const Morphism& f, const Morphism& g) const;
  /// g = f * (the returned morphism); requires f to left-divide g.
  Morphism left_complement(const Morphism& f, const Morphism& g) const;
  std::vector<Morphism> divisors(const Morphism& f) const;

  /// Unique 2-cell containing y and two of its neighbours; -1 when none.
  Cell triangle_two_cell(Vertex y, Vertex y1, Vertex y2) const;

  /// Lexicographically least geodesic concatenation representing f.
  VertexPath representative_path(const Morphism& f) const;

  GroupoidElement word_to_element(const SalvettiComplex& sal, const std::vector<Letter>& word,
                                  Vertex start = -1) const;  // NotComposable
  Vertex element_source(const GroupoidElement& g) const;
  Vertex element_target(const GroupoidElement& g) const;
  bool equal(const SalvettiComplex& sal, const std::vector<Letter>& w1,
             const std::vector<Letter>& w2, Vertex start1 = -1, Vertex start2 = -1) const;
  bool is_trivial(const SalvettiComplex& sal, const std::vector<Letter>& w, Vertex start = -1) const;
  std::string format_element(const GroupoidElement& g) const;

 private:
  GarsideContext() = default;

  std::shared_ptr<const CellComplex> q_;
  HemisphereMaps maps_;
  Involution phi_;
  std::shared_ptr<PathOracle> oracle_;
  std::vector<std::vector<Cell>> two_cells_of_vertex_;
  std::vector<int> vindex_;
};

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct VerifyReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

/// Exhaustive axiom suite over morphisms of bounded length, cross-validated
/// against the path oracle: normal-form soundness, homogeneity,
/// cancellativity (atom frames), naturality, simplicity of atoms, meets,
/// joins, divisibility, the head law and the delta-power bound.
VerifyReport verify_garside(const GarsideContext& ctx, int max_len, int cancel_len = 2);

/// All normal forms of morphisms of length <= max_len, sorted.
std::vector<Morphism> enumerate_morphisms(const GarsideContext& ctx, int max_len);

}  // namespace garside
