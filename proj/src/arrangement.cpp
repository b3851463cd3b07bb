#include "garside/arrangement.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace garside {

SignVector negate_sign_vector(const SignVector& x) {
  SignVector out = x;
  for (char& c : out) {
    if (c == '+')
      c = '-';
    else if (c == '-')
      c = '+';
  }
  return out;
}

bool sign_leq(const SignVector& x, const SignVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != '0' && x[i] != y[i]) return false;
  return true;
}

bool is_tope(const SignVector& x) { return x.find('0') == std::string::npos; }

SignVector sign_compose(const SignVector& x, const SignVector& y) {
  SignVector out = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (out[i] == '0') out[i] = y[i];
  return out;
}

int separation_count(const SignVector& t1, const SignVector& t2) {
  int k = 0;
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (t1[i] != '0' && t2[i] != '0' && t1[i] != t2[i]) ++k;
  return k;
}

bool FaceLattice::contains(const SignVector& x) const {
  return std::binary_search(covectors.begin(), covectors.end(), x);
}

std::vector<SignVector> FaceLattice::topes() const {
  std::vector<SignVector> out;
  for (const SignVector& x : covectors)
    if (is_tope(x)) out.push_back(x);
  return out;
}

namespace {

Int parse_int(const std::string& tok, int line_no) {
  try {
    return Int(tok);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad number '" + tok + "' on line " + std::to_string(line_no));
  }
}

}  // namespace

NormalMatrix parse_arrangement(std::istream& in) {
  NormalMatrix rows;
  std::string line;
  int line_no = 0;
  std::size_t width = 0;
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> raw;  // (nums, dens)
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::string tok;
    std::vector<Int> nums, dens;
    while (ss >> tok) {
      auto slash = tok.find('/');
      Int num, den = 1;
      if (slash == std::string::npos) {
        num = parse_int(tok, line_no);
      } else {
        num = parse_int(tok.substr(0, slash), line_no);
        den = parse_int(tok.substr(slash + 1), line_no);
        if (den <= 0) fail(Errc::ParseError, "nonpositive denominator on line " + std::to_string(line_no));
      }
      nums.push_back(num);
      dens.push_back(den);
    }
    if (nums.empty()) continue;
    if (width == 0) width = nums.size();
    if (nums.size() != width) fail(Errc::ParseError, "inconsistent coordinate count on line " + std::to_string(line_no));
    raw.emplace_back(std::move(nums), std::move(dens));
  }
  for (auto& [nums, dens] : raw) {
    Int scale = 1;
    for (const Int& d : dens) scale = scale / boost::multiprecision::gcd(scale, d) * d;
    IntVec row(nums.size());
    for (std::size_t i = 0; i < nums.size(); ++i) row[i] = nums[i] * (scale / dens[i]);
    row = primitive(std::move(row));
    bool zero = std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; });
    if (zero) fail(Errc::ZeroNormal, "zero normal vector");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::ParseError, "no hyperplanes in arrangement input");
  return rows;
}

FaceLattice covectors_from_hyperplanes(const NormalMatrix& normals) {
  if (normals.empty()) fail(Errc::ParseError, "need at least one normal");
  for (const IntVec& row : normals) {
    bool zero = std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; });
    if (zero) fail(Errc::ZeroNormal, "zero normal vector");
  }
  int n = static_cast<int>(normals.size());
  FaceLattice fl;
  fl.n = n;
  static const char kSigns[3] = {'+', '-', '0'};
  SignVector cur(static_cast<std::size_t>(n), '0');
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i) {
      cur[static_cast<std::size_t>(i)] = kSigns[c % 3];
      c /= 3;
    }
    if (sign_system_feasible(normals, cur)) fl.covectors.push_back(cur);
  }
  std::sort(fl.covectors.begin(), fl.covectors.end());
  return fl;
}

FaceLattice load_covectors(std::istream& in) {
  FaceLattice fl;
  std::string line;
  int line_no = 0;
  std::set<SignVector> seen;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      for (char c : tok)
        if (c != '+' && c != '-' && c != '0')
          fail(Errc::BadSignChar, std::string("'") + c + "' on line " + std::to_string(line_no));
      if (fl.n == 0) fl.n = static_cast<int>(tok.size());
      if (static_cast<int>(tok.size()) != fl.n)
        fail(Errc::RaggedLengths, "sign string length mismatch on line " + std::to_string(line_no));
      seen.insert(tok);
    }
  }
  if (seen.empty()) fail(Errc::ParseError, "no covectors in input");
  for (const SignVector& x : seen)
    if (!seen.count(negate_sign_vector(x)))
      fail(Errc::NotCentrallySymmetric, "missing negation of " + x);
  if (!seen.count(SignVector(static_cast<std::size_t>(fl.n), '0')))
    fail(Errc::MissingZeroVector, "zero covector absent");
  fl.covectors.assign(seen.begin(), seen.end());
  return fl;
}

void save_covectors(const FaceLattice& fl, std::ostream& out) {
  for (const SignVector& x : fl.covectors) out << x << "\n";
}

namespace {

struct Grading {
  // Longest and shortest saturated chain lengths from each covector up to a
  // tope; equal on graded lattices.
  std::vector<int> longest, shortest;
  std::vector<std::vector<int>> ups;  // strict upper covers, as indices
};

Grading grade(const std::vector<SignVector>& covs) {
  std::size_t m = covs.size();
  Grading g;
  g.longest.assign(m, -1);
  g.shortest.assign(m, -1);
  g.ups.assign(m, {});
  std::vector<std::vector<int>> above(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && sign_leq(covs[i], covs[j])) above[i].push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < m; ++i) {
    for (int j : above[i]) {
      bool cover = true;
      for (int k : above[i]) {
        if (k != j && sign_leq(covs[static_cast<std::size_t>(k)], covs[static_cast<std::size_t>(j)])) {
          cover = false;  // i < k < j
          break;
        }
      }
      if (cover) g.ups[i].push_back(j);
    }
  }
  // Process in decreasing support-size order so all covers are resolved.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  auto supp = [&](std::size_t i) {
    return std::count_if(covs[i].begin(), covs[i].end(), [](char c) { return c != '0'; });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return supp(a) > supp(b); });
  for (std::size_t i : order) {
    if (is_tope(covs[i])) {
      g.longest[i] = g.shortest[i] = 0;
      continue;
    }
    int lo = -1, hi = -1;
    for (int j : g.ups[i]) {
      if (g.longest[static_cast<std::size_t>(j)] < 0) continue;
      int l = g.longest[static_cast<std::size_t>(j)] + 1;
      int s = g.shortest[static_cast<std::size_t>(j)] + 1;
      hi = std::max(hi, l);
      lo = (lo < 0) ? s : std::min(lo, s);
    }
    g.longest[i] = hi;
    g.shortest[i] = lo;
  }
  return g;
}

}  // namespace

DualComplex dual_complex(const FaceLattice& fl) {
  std::vector<SignVector> nonzero;
  for (const SignVector& x : fl.covectors)
    if (x.find_first_not_of('0') != std::string::npos) nonzero.push_back(x);
  bool has_tope = std::any_of(nonzero.begin(), nonzero.end(), is_tope);
  if (!has_tope) fail(Errc::NoTopes, "face lattice has no tope");

  Grading g = grade(nonzero);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    if (g.longest[i] < 0)
      fail(Errc::NotGraded, "covector " + nonzero[i] + " has no chain to a tope");
    if (g.longest[i] != g.shortest[i])
      fail(Errc::NotGraded, "chains from " + nonzero[i] + " to topes have lengths " +
                                std::to_string(g.shortest[i]) + ".." + std::to_string(g.longest[i]));
  }

  // Cell order: by (dim, covector); topes (dim 0) come first.
  std::vector<std::size_t> order(nonzero.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (g.longest[a] != g.longest[b]) return g.longest[a] < g.longest[b];
    return nonzero[a] < nonzero[b];
  });

  DualComplex dc;
  dc.cell_covector.resize(nonzero.size());
  std::vector<int> cell_of(nonzero.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    cell_of[order[pos]] = static_cast<int>(pos);
    dc.cell_covector[pos] = nonzero[order[pos]];
    dc.covector_cell[nonzero[order[pos]]] = static_cast<int>(pos);
  }

  std::vector<CellDescriptor> descr(nonzero.size());
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    Cell me = cell_of[i];
    CellDescriptor& d = descr[static_cast<std::size_t>(me)];
    d.dim = g.longest[i];
    for (std::size_t j = 0; j < nonzero.size(); ++j) {
      if (i == j) continue;
      if (sign_leq(nonzero[i], nonzero[j])) {
        // Order reversal: larger covectors are faces of this cell.
        if (is_tope(nonzero[j]))
          d.verts.push_back(cell_of[j]);
        else
          d.faces.push_back(cell_of[j]);
      }
    }
    if (is_tope(nonzero[i])) d.verts = {me};
    else {
      for (Cell v : d.verts) d.faces.push_back(v);
    }
    std::sort(d.faces.begin(), d.faces.end());
    std::sort(d.verts.begin(), d.verts.end());
  }
  dc.complex = build_complex(descr);
  return dc;
}

CellComplex completed_complex(const CellComplex& q) {
  std::vector<CellDescriptor> descr;
  for (Cell e = 0; e < q.cell_count(); ++e) {
    CellDescriptor d;
    d.dim = q.dim(e);
    d.faces = q.proper_faces(e);
    d.verts = q.vertices_of(e);
    descr.push_back(std::move(d));
  }
  CellDescriptor top;
  top.dim = q.top_dim() + 1;
  for (Cell e = 0; e < q.cell_count(); ++e) top.faces.push_back(e);
  top.verts = q.vertices();
  descr.push_back(std::move(top));
  return build_complex(descr);
}

CheckResult check_simplicial(const FaceLattice& fl) {
  std::vector<SignVector> nonzero;
  for (const SignVector& x : fl.covectors)
    if (x.find_first_not_of('0') != std::string::npos) nonzero.push_back(x);
  if (nonzero.empty()) return {false, "no nonzero covectors"};
  Grading g = grade(nonzero);
  int rank = 0;
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    if (g.longest[i] < 0 || g.longest[i] != g.shortest[i])
      fail(Errc::NotGraded, "covector " + nonzero[i] + " breaks the grading");
    rank = std::max(rank, g.longest[i] + 1);
  }

  for (const SignVector& t : fl.covectors) {
    if (!is_tope(t)) continue;
    std::vector<SignVector> interval;  // nonzero faces of t
    for (const SignVector& x : nonzero)
      if (sign_leq(x, t)) interval.push_back(x);
    // Atoms: minimal nonzero faces.
    std::vector<SignVector> atoms;
    for (const SignVector& x : interval) {
      bool minimal = true;
      for (const SignVector& y : interval)
        if (y != x && sign_leq(y, x)) {
          minimal = false;
          break;
        }
      if (minimal) atoms.push_back(x);
    }
    int facets = 0;
    for (const SignVector& x : interval)
      if (x != t && g.longest[static_cast<std::size_t>(std::find(nonzero.begin(), nonzero.end(), x) - nonzero.begin())] == 1)
        ++facets;
    auto witness = [&](const std::string& why) {
      return CheckResult{false, "tope " + t + " (" + std::to_string(facets) + " facets at rank " +
                                    std::to_string(rank) + "): " + why};
    };
    if (static_cast<int>(atoms.size()) != rank)
      return witness("interval has " + std::to_string(atoms.size()) + " atoms");
    if (interval.size() + 1 != (std::size_t{1} << atoms.size()))
      return witness("interval size " + std::to_string(interval.size() + 1) + " is not 2^" + std::to_string(atoms.size()));
    // Atom supports must determine and order the faces.
    std::set<std::vector<int>> seen;
    for (const SignVector& x : interval) {
      std::vector<int> sup;
      for (std::size_t a = 0; a < atoms.size(); ++a)
        if (sign_leq(atoms[a], x)) sup.push_back(static_cast<int>(a));
      if (!seen.insert(sup).second) return witness("two faces share the atom set");
      for (const SignVector& y : interval) {
        bool below = sign_leq(x, y);
        bool sub = true;
        for (std::size_t a = 0; a < atoms.size(); ++a)
          if (sign_leq(atoms[a], x) && !sign_leq(atoms[a], y)) {
            sub = false;
            break;
          }
        if (below != sub) return witness("atom supports do not mirror the order");
      }
    }
  }
  return {true, ""};
}

bool check_proper(const NormalMatrix& normals) {
  if (normals.empty()) return false;
  return int_rank(normals) == static_cast<int>(normals[0].size());
}

CheckResult check_centrally_symmetric(const FaceLattice& fl) {
  for (const SignVector& x : fl.covectors)
    if (!fl.contains(negate_sign_vector(x)))
      return {false, "missing negation of " + x};
  return {true, ""};
}

CircuitSet circuits_from_topes(const FaceLattice& fl) {
  CircuitSet cs;
  cs.n = fl.n;
  std::vector<SignVector> topes = fl.topes();
  int n = fl.n;
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<std::pair<unsigned, SignVector>> found;  // (support mask, pattern)
  for (unsigned mask : masks) {
    int k = __builtin_popcount(mask);
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    for (unsigned bits = 0; bits < (1u << k); ++bits) {
      SignVector sigma(static_cast<std::size_t>(n), '0');
      for (int j = 0; j < k; ++j) sigma[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = (bits & (1u << j)) ? '-' : '+';
      // Superset pruning: a smaller circuit inside this candidate kills it.
      bool pruned = false;
      for (const auto& [cm, cp] : found) {
        if ((cm & mask) != cm) continue;
        if (sign_leq(cp, sigma)) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;
      // Covering test: no tope realizes the entrywise opposite of sigma.
      bool covered = true;
      for (const SignVector& t : topes) {
        bool opposite = true;
        for (int i : idx)
          if (t[static_cast<std::size_t>(i)] == sigma[static_cast<std::size_t>(i)]) {
            opposite = false;
            break;
          }
        if (opposite) {
          covered = false;
          break;
        }
      }
      if (covered) found.emplace_back(mask, sigma);
    }
  }
  for (auto& [m, p] : found) cs.circuits.push_back(p);
  std::sort(cs.circuits.begin(), cs.circuits.end());
  return cs;
}

CheckResult check_om_circuit_axioms(const CircuitSet& cs) {
  const auto& E = cs.circuits;
  auto signed_subset = [](const SignVector& a, const SignVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != '0' && a[i] != b[i]) return false;
    return true;
  };
  for (const SignVector& a : E)
    for (const SignVector& b : E)
      if (a != b && signed_subset(a, b))
        return {false, "circuit " + a + " is contained in " + b};
  for (const SignVector& a : E) {
    SignVector na = negate_sign_vector(a);
    if (std::find(E.begin(), E.end(), na) == E.end())
      return {false, "negation of " + a + " missing"};
    // With one sign per element, C and C* share an element only if some
    // entry carried both signs, which the representation forbids.
  }
  for (const SignVector& s : E) {
    for (const SignVector& t : E) {
      SignVector nt = negate_sign_vector(t);
      if (s == nt) continue;
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (s[x] == '0' || nt[x] != s[x]) continue;  // x must lie in S and T*
        bool found = false;
        for (const SignVector& c : E) {
          bool ok = true;
          for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == '0') continue;
            if (i == x) {
              ok = false;
              break;
            }
            if (c[i] != s[i] && c[i] != t[i]) {
              ok = false;
              break;
            }
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found)
          return {false, "elimination fails for S=" + s + " T=" + t + " at element " + std::to_string(x)};
      }
    }
  }
  return {true, ""};
}

int om_rank(const CircuitSet& cs) {
  if (cs.circuits.empty()) fail(Errc::NoCircuits, "circuit set is empty");
  std::size_t best = cs.circuits[0].size() + 1;
  for (const SignVector& c : cs.circuits) {
    std::size_t k = static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](char ch) { return ch != '0'; }));
    best = std::min(best, k);
  }
  return static_cast<int>(best) - 1;
}

}  // namespace garside
