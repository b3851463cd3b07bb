#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "garside/cell_complex.hpp"
#include "garside/linalg.hpp"
#include "garside/mh.hpp"

namespace garside {

/// Sign vector over {'+','-','0'}, one entry per arrangement element.
using SignVector = std::string;

SignVector negate_sign_vector(const SignVector& x);
/// X <= Y iff every nonzero entry of X agrees with Y (zero refinement order).
bool sign_leq(const SignVector& x, const SignVector& y);
bool is_tope(const SignVector& x);
/// Composition X o Y: entrywise X where nonzero, else Y.
SignVector sign_compose(const SignVector& x, const SignVector& y);
/// Number of elements separating two topes.
int separation_count(const SignVector& t1, const SignVector& t2);

/// Covector set of an oriented matroid / central arrangement, closed under
/// negation and containing the zero vector. Sorted for determinism.
struct FaceLattice {
  int n = 0;
  std::vector<SignVector> covectors;

  bool contains(const SignVector& x) const;
  std::vector<SignVector> topes() const;
};

/// One hyperplane per row; primitive integer normal vectors.
using NormalMatrix = std::vector<IntVec>;

/// Parses "p", "-p", "p/q" coordinates, one hyperplane per line.
NormalMatrix parse_arrangement(std::istream& in);

/// All sign vectors realizable by a rational point, decided by exact
/// elimination per candidate over the 3^n patterns.
FaceLattice covectors_from_hyperplanes(const NormalMatrix& normals);

FaceLattice load_covectors(std::istream& in);
void save_covectors(const FaceLattice& fl, std::ostream& out);

/// Dual complex: one cell per nonzero covector, with the order reversed so
/// topes become vertices. Cells are ordered by (dim, covector).
struct DualComplex {
  CellComplex complex;
  std::vector<SignVector> cell_covector;      // cell id -> covector
  std::map<SignVector, Cell> covector_cell;   // covector -> cell id
};
DualComplex dual_complex(const FaceLattice& fl);  // NoTopes, NotGraded

/// Adds a single top-dimensional cell whose closure is the whole complex.
CellComplex completed_complex(const CellComplex& q);

/// True iff each tope's face interval is Boolean of uniform rank.
CheckResult check_simplicial(const FaceLattice& fl);

/// True iff the normals span the ambient dimension.
bool check_proper(const NormalMatrix& normals);

CheckResult check_centrally_symmetric(const FaceLattice& fl);

/// Circuits in the covering sense: minimal consistent halfspace sets whose
/// closures cover the sphere, i.e. whose entrywise opposite extends to no
/// tope. Each circuit is a sign vector supported on its elements.
struct CircuitSet {
  int n = 0;
  std::vector<SignVector> circuits;
};
CircuitSet circuits_from_topes(const FaceLattice& fl);

/// Axioms: (1) incomparability, (2) closure under negation with empty
/// intersection, (3) elimination.
CheckResult check_om_circuit_axioms(const CircuitSet& cs);

/// Minimal circuit cardinality minus one.
int om_rank(const CircuitSet& cs);  // NoCircuits

}  // namespace garside
