#include "garside/linalg.hpp"

#include <algorithm>
#include <set>

namespace garside {

namespace {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

IntVec primitive(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

int int_rank(std::vector<IntVec> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Int a = rows[row][col], b = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] * a - rows[row][c] * b;
      rows[r] = primitive(std::move(rows[r]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool sign_system_feasible(const std::vector<IntVec>& normals, const std::string& signs) {
  std::size_t d = normals.empty() ? 0 : normals[0].size();
  std::vector<IntVec> eqs;
  std::vector<IntVec> strict;  // every row required > 0
  for (std::size_t i = 0; i < normals.size(); ++i) {
    IntVec row = normals[i];
    switch (signs[i]) {
      case '0': eqs.push_back(std::move(row)); break;
      case '+': strict.push_back(std::move(row)); break;
      case '-':
        for (Int& x : row) x = -x;
        strict.push_back(std::move(row));
        break;
      default: return false;
    }
  }

  // Substitute equalities away. Adding equality multiples preserves strict
  // rows as long as their own scale factor stays positive.
  std::vector<char> used_col(d, 0);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    eqs[i] = primitive(std::move(eqs[i]));
    std::size_t piv = d;
    for (std::size_t c = 0; c < d; ++c)
      if (!used_col[c] && eqs[i][c] != 0) {
        piv = c;
        break;
      }
    if (piv == d) continue;  // redundant 0 = 0
    used_col[piv] = 1;
    auto eliminate = [&](IntVec& row, bool keep_positive) {
      if (row[piv] == 0) return;
      Int pc = eqs[i][piv];
      Int scale = pc, mult = row[piv];
      if (keep_positive && scale < 0) {
        scale = -scale;
        mult = -mult;
      }
      for (std::size_t c = 0; c < d; ++c) row[c] = row[c] * scale - eqs[i][c] * mult;
      row = primitive(std::move(row));
    };
    for (std::size_t j = i + 1; j < eqs.size(); ++j) eliminate(eqs[j], false);
    for (IntVec& row : strict) eliminate(row, true);
  }

  std::set<IntVec> sys;
  for (IntVec& row : strict) {
    row = primitive(std::move(row));
    if (is_zero(row)) return false;  // 0 > 0
    sys.insert(std::move(row));
  }

  for (std::size_t col = 0; col < d; ++col) {
    std::vector<IntVec> pos, neg, zero;
    for (const IntVec& row : sys) {
      if (row[col] > 0)
        pos.push_back(row);
      else if (row[col] < 0)
        neg.push_back(row);
      else
        zero.push_back(row);
    }
    if (pos.empty() || neg.empty()) {
      // The column is unbounded in one direction; those rows are satisfiable
      // independently of the rest.
      sys = std::set<IntVec>(zero.begin(), zero.end());
      continue;
    }
    std::set<IntVec> next(zero.begin(), zero.end());
    for (const IntVec& a : pos) {
      for (const IntVec& b : neg) {
        IntVec row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = a[col] * b[c] - b[col] * a[c];
        row = primitive(std::move(row));
        if (is_zero(row)) return false;
        next.insert(std::move(row));
      }
    }
    sys = std::move(next);
  }
  return sys.empty();
}

}  // namespace garside
