#include "garside/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef GARSIDE_FIXTURE_DIR_DEFAULT
#define GARSIDE_FIXTURE_DIR_DEFAULT "fixtures"
#endif

namespace garside {

namespace {

bool parse_i2m(const std::string& name, int* m_out) {
  if (name.size() < 3 || name.rfind("I2", 0) != 0) return false;
  int m = 0;
  for (std::size_t i = 2; i < name.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(name[i]))) return false;
    m = m * 10 + (name[i] - '0');
  }
  if (m < 2 || m > 64) return false;
  *m_out = m;
  return true;
}

}  // namespace

bool is_fixture_name(const std::string& name) {
  int m;
  return name == "S4" || name == "GEN4" || name == "NONPAP" || parse_i2m(name, &m);
}

std::string fixture_dir() {
  if (const char* env = std::getenv("GARSIDE_FIXTURE_DIR"); env && *env) return env;
  if (std::filesystem::exists(GARSIDE_FIXTURE_DIR_DEFAULT)) return GARSIDE_FIXTURE_DIR_DEFAULT;
  return "fixtures";
}

std::string fixture_file(const std::string& name) {
  std::string ext = (name == "NONPAP") ? ".cov" : ".arr";
  return fixture_dir() + "/" + name + ext;
}

NormalMatrix fixture_normals(const std::string& name) {
  if (name == "NONPAP")
    fail(Errc::ParseError, "NONPAP is a covector dataset with no realizing normals");
  std::string path = fixture_file(name);
  if (std::ifstream in(path); in) return parse_arrangement(in);
  int m = 0;
  if (parse_i2m(name, &m)) {
    NormalMatrix rows;
    rows.push_back({Int(1), Int(0)});
    rows.push_back({Int(0), Int(1)});
    for (int k = 1; k + 2 <= m; ++k) rows.push_back({Int(1), Int(k)});
    return rows;
  }
  fail(Errc::ParseError, "unknown fixture '" + name + "' and no file at " + path);
}

FaceLattice fixture_lattice(const std::string& name) {
  if (name == "NONPAP") {
    std::string path = fixture_file(name);
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "missing covector dataset " + path);
    return load_covectors(in);
  }
  return covectors_from_hyperplanes(fixture_normals(name));
}

FixtureWorkspace fixture_workspace(const std::string& name, OracleOptions opts) {
  FaceLattice lattice = fixture_lattice(name);
  DualComplex dual = dual_complex(lattice);
  CellComplex completed = completed_complex(dual.complex);
  GarsideContext ctx = GarsideContext::make(completed, opts);
  SalvettiComplex sal = build_salvetti(completed, ctx.maps());
  return {std::move(lattice), std::move(dual), std::move(completed), std::move(ctx), std::move(sal)};
}

}  // namespace garside
