#pragma once

#include <string>

#include "garside/arrangement.hpp"
#include "garside/engine.hpp"
#include "garside/salvetti.hpp"

namespace garside {

/// Bundled fixture names: I2<m> (m central lines), S4 (braid arrangement of
/// the symmetric group on four letters, essentialized), GEN4 (four generic
/// planes), NONPAP (non-Pappus covector dataset).
bool is_fixture_name(const std::string& name);

/// Resolution order: $GARSIDE_FIXTURE_DIR, the compiled-in default, ./fixtures.
std::string fixture_dir();
std::string fixture_file(const std::string& name);  // full path; may not exist

/// Normals of an arrangement fixture; I2<m> is synthesized when no file is
/// bundled. Throws for covector-only fixtures.
NormalMatrix fixture_normals(const std::string& name);

/// Covector lattice of any fixture (computed from normals or loaded).
FaceLattice fixture_lattice(const std::string& name);

struct FixtureWorkspace {
  FaceLattice lattice;
  DualComplex dual;
  CellComplex completed;
  GarsideContext ctx;  // context over the completed dual
  SalvettiComplex sal; // Salvetti complex of the completed dual
};

FixtureWorkspace fixture_workspace(const std::string& name, OracleOptions opts = {});

}  // namespace garside
